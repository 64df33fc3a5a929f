#include "a22/jsonio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>

namespace a22::io {

namespace {

long long coef_to_ll(const Int& c) {
  if (c > std::numeric_limits<long long>::max() ||
      c < std::numeric_limits<long long>::min())
    throw std::overflow_error("coefficient exceeds the JSON integer range");
  return c.convert_to<long long>();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [exp, coef] : p.terms()) {
    Json term;
    term["exp"] = exp.e;
    term["coef"] = coef_to_ll(coef);
    arr.push_back(std::move(term));
  }
  return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly p;
  for (const Json& term : j) {
    ExpVec exp;
    const auto& raw = term.at("exp");
    if (!raw.is_array() || raw.size() != kNumVars)
      throw std::invalid_argument("term \"exp\" must hold 6 integers");
    for (int i = 0; i < kNumVars; ++i) exp.e[i] = raw[i].get<int>();
    if (!exp.storable())
      throw std::invalid_argument("negative exponent on x3, x4, y1 or y2");
    p.add_term(exp, Int(term.at("coef").get<long long>()));
  }
  return p;
}

Json to_json(const snake::PerfectMatching& m) {
  Json j;
  j["n"] = m.n;
  Json edges = Json::array();
  for (const snake::Edge& e : m.edges) edges.push_back(e.name());
  j["edges"] = std::move(edges);
  return j;
}

snake::PerfectMatching matching_from_json(const Json& j) {
  snake::PerfectMatching m;
  m.n = j.at("n").get<int>();
  for (const Json& name : j.at("edges"))
    m.edges.push_back(snake::Edge::parse(name.get<std::string>()));
  std::sort(m.edges.begin(), m.edges.end(),
            [](const snake::Edge& a, const snake::Edge& b) {
              return std::pair(a.pos, a.kind) < std::pair(b.pos, b.kind);
            });
  return m;
}

Json to_json(const dyck::CompatiblePair& sel) {
  Json j;
  j["a1"] = sel.n + 1;
  j["a2"] = sel.n;
  j["S1"] = sel.s1;
  j["S2"] = sel.s2;
  j["indexing"] = "0-based";
  return j;
}

dyck::CompatiblePair pair_from_json(const Json& j) {
  const int a1 = j.at("a1").get<int>();
  const int a2 = j.at("a2").get<int>();
  if (a1 != a2 + 1)
    throw std::invalid_argument("compatible pair JSON must have a1 = a2 + 1");
  if (j.contains("indexing") && j["indexing"].get<std::string>() != "0-based")
    throw std::invalid_argument("family pairs use the 0-based indexing");
  dyck::CompatiblePair sel;
  sel.n = a2;
  sel.s1 = j.at("S1").get<std::vector<int>>();
  sel.s2 = j.at("S2").get<std::vector<int>>();
  std::sort(sel.s1.begin(), sel.s1.end());
  std::sort(sel.s2.begin(), sel.s2.end());
  for (int i : sel.s1)
    if (i < 0 || i > sel.n) throw std::invalid_argument("S1 index out of range");
  for (int v : sel.s2)
    if (v < 1 || v > sel.n) throw std::invalid_argument("S2 index out of range");
  return sel;
}

Json to_json(const nondec::NonDecPath& p) {
  Json mountains = Json::array();
  for (const nondec::Mountain& m : p.mountains)
    mountains.push_back(Json::array({m.d, m.e}));
  Json j;
  j["mountains"] = std::move(mountains);
  return j;
}

nondec::NonDecPath path_from_json(const Json& j) {
  nondec::NonDecPath p;
  for (const Json& m : j.at("mountains")) {
    if (!m.is_array() || m.size() != 2)
      throw std::invalid_argument("each mountain must be a [d,e] pair");
    p.mountains.push_back({m[0].get<int>(), m[1].get<int>()});
  }
  nondec::validate(p);
  return p;
}

std::string dump(const Json& j) { return j.dump(); }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw std::invalid_argument("JSON parse error at line " +
                                std::to_string(line) + ": " + e.what());
  }
}

}  // namespace a22::io
