#include "a22/snake.hpp"

#include <algorithm>
#include <stdexcept>

namespace a22::snake {

std::string Edge::name() const {
  static const char* kNames[3] = {"rung", "sideA", "sideB"};
  return std::string(kNames[kind]) + ":" + std::to_string(pos);
}

Edge Edge::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("edge name missing ':': " + s);
  const std::string head = s.substr(0, colon);
  Kind kind;
  if (head == "rung")
    kind = kRung;
  else if (head == "sideA")
    kind = kSideA;
  else if (head == "sideB")
    kind = kSideB;
  else
    throw std::invalid_argument("unknown edge kind: " + s);
  int pos;
  try {
    pos = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad edge index: " + s);
  }
  if (pos < 0) throw std::invalid_argument("negative edge index: " + s);
  return Edge{kind, pos};
}

LaurentPoly SnakeGraph::edge_weight(const Edge& e) const {
  if (e.kind == Edge::kRung)
    return LaurentPoly::variable(e.pos % 2 == 0 ? Var::x3 : Var::x4);
  return LaurentPoly::variable(e.pos % 2 == 0 ? Var::x2 : Var::x1);
}

LaurentPoly SnakeGraph::tile_coefficient(int t) const {
  return LaurentPoly::variable(t % 2 == 1 ? Var::y1 : Var::y2);
}

std::vector<Edge> SnakeGraph::all_edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int i = 0; i <= tiles; ++i) out.push_back({Edge::kRung, i});
  for (int i = 0; i < tiles; ++i) {
    out.push_back({Edge::kSideA, i});
    out.push_back({Edge::kSideB, i});
  }
  return out;
}

SnakeGraph build(int n) {
  if (n < 1) throw std::invalid_argument("snake graph needs n >= 1");
  return SnakeGraph{n};
}

bool is_perfect_matching(const SnakeGraph& g, const PerfectMatching& p) {
  if (p.n != g.tiles) return false;
  // cover[0][i] = A_i, cover[1][i] = B_i
  std::vector<int> cover(2 * (g.tiles + 1), 0);
  auto touch = [&](int rail, int i) {
    if (i < 0 || i > g.tiles) return false;
    ++cover[rail * (g.tiles + 1) + i];
    return true;
  };
  for (const Edge& e : p.edges) {
    switch (e.kind) {
      case Edge::kRung:
        if (e.pos > g.tiles || !touch(0, e.pos) || !touch(1, e.pos))
          return false;
        break;
      case Edge::kSideA:
        if (e.pos >= g.tiles || !touch(0, e.pos) || !touch(0, e.pos + 1))
          return false;
        break;
      case Edge::kSideB:
        if (e.pos >= g.tiles || !touch(1, e.pos) || !touch(1, e.pos + 1))
          return false;
        break;
    }
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

void sort_edges(PerfectMatching& m) {
  std::sort(m.edges.begin(), m.edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.pos, a.kind) < std::pair(b.pos, b.kind);
  });
}

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
  // A matching decomposes into blocks along the columns 0..n: either a rung
  // at column c or a side pair spanning columns c, c+1.
  std::vector<PerfectMatching> out;
  PerfectMatching cur;
  cur.n = g.tiles;
  auto rec = [&](auto&& self, int c) -> void {
    if (c == g.tiles + 1) {
      out.push_back(cur);
      return;
    }
    cur.edges.push_back({Edge::kRung, c});
    self(self, c + 1);
    cur.edges.pop_back();
    if (c + 1 <= g.tiles) {
      cur.edges.push_back({Edge::kSideA, c});
      cur.edges.push_back({Edge::kSideB, c});
      self(self, c + 2);
      cur.edges.pop_back();
      cur.edges.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Int count_matchings(int n) {
  build(n);  // range check
  // ways[c] = matchings of the columns c..n
  Int next{1}, cur{1};  // ways[n+1], ways[n]
  for (int c = n - 1; c >= 0; --c) {
    Int w = cur + next;  // rung at c, or side pair at c,c+1
    next = cur;
    cur = w;
  }
  return cur;
}

PerfectMatching p_minus(const SnakeGraph& g) {
  PerfectMatching m;
  m.n = g.tiles;
  for (int i = 0; i + 1 <= g.tiles; i += 2) {
    m.edges.push_back({Edge::kSideA, i});
    m.edges.push_back({Edge::kSideB, i});
  }
  if (g.tiles % 2 == 0) m.edges.push_back({Edge::kRung, g.tiles});
  sort_edges(m);
  return m;
}

PerfectMatching p_plus(const SnakeGraph& g) {
  PerfectMatching m;
  m.n = g.tiles;
  m.edges.push_back({Edge::kRung, 0});
  for (int i = 1; i + 1 <= g.tiles; i += 2) {
    m.edges.push_back({Edge::kSideA, i});
    m.edges.push_back({Edge::kSideB, i});
  }
  if (g.tiles % 2 == 1) m.edges.push_back({Edge::kRung, g.tiles});
  sort_edges(m);
  return m;
}

std::vector<Edge> symmetric_difference(const SnakeGraph& g,
                                       const PerfectMatching& p) {
  if (!is_perfect_matching(g, p))
    throw std::invalid_argument("not a perfect matching of H_n");
  const PerfectMatching base = p_minus(g);
  std::vector<Edge> a = base.edges, b = p.edges;
  auto by_canon = [](const Edge& x, const Edge& y) {
    return std::pair(x.pos, x.kind) < std::pair(y.pos, y.kind);
  };
  std::sort(a.begin(), a.end(), by_canon);
  std::sort(b.begin(), b.end(), by_canon);
  std::vector<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out), by_canon);
  return out;
}

std::vector<int> symmetric_difference_tiles(const SnakeGraph& g,
                                            const PerfectMatching& p) {
  std::vector<int> tiles;
  for (const Edge& e : symmetric_difference(g, p))
    if (e.kind == Edge::kSideA) tiles.push_back(e.pos + 1);
  return tiles;
}

LaurentPoly weight(const SnakeGraph& g, const PerfectMatching& p) {
  LaurentPoly w{1};
  for (const Edge& e : p.edges) w *= g.edge_weight(e);
  return w;
}

LaurentPoly y_monomial(const SnakeGraph& g, const PerfectMatching& p) {
  LaurentPoly y{1};
  for (int t : symmetric_difference_tiles(g, p)) y *= g.tile_coefficient(t);
  return y;
}

LaurentPoly z_direct(int n) {
  const SnakeGraph g = build(n);
  LaurentPoly sum;
  for (const PerfectMatching& p : enumerate_matchings(g))
    sum += weight(g, p) * y_monomial(g, p);
  ExpVec denom;
  denom[Var::x1] = -(n + 1) / 2;
  denom[Var::x2] = -(n / 2);
  return sum * LaurentPoly::monomial(denom);
}

LaurentPoly z_recur(int n) {
  if (n < 1) throw std::invalid_argument("z_n needs n >= 1");
  std::vector<LaurentPoly> z(std::max(n, 2) + 1);
  z[1] = z_direct(1);
  z[2] = z_direct(2);
  ExpVec e;
  e[Var::x1] = -1;
  e[Var::x4] = 1;
  e[Var::y1] = 1;
  const LaurentPoly odd_prev = LaurentPoly::monomial(e);  // x1^-1 x4 y1
  e = ExpVec{};
  e[Var::x1] = -1;
  e[Var::x2] = 1;
  const LaurentPoly odd_prev2 = LaurentPoly::monomial(e);  // x1^-1 x2
  e = ExpVec{};
  e[Var::x2] = -1;
  e[Var::x3] = 1;
  const LaurentPoly even_prev = LaurentPoly::monomial(e);  // x2^-1 x3
  e = ExpVec{};
  e[Var::x1] = 1;
  e[Var::x2] = -1;
  e[Var::y1] = 1;
  e[Var::y2] = 1;
  const LaurentPoly even_prev2 = LaurentPoly::monomial(e);  // x1 x2^-1 y1 y2
  for (int m = 3; m <= n; ++m) {
    if (m % 2 == 1)
      z[m] = odd_prev * z[m - 1] + odd_prev2 * z[m - 2];
    else
      z[m] = even_prev * z[m - 1] + even_prev2 * z[m - 2];
  }
  return z[n];
}

LaurentPoly cluster_variable_via_snake(int k) {
  if (k < 3) throw std::invalid_argument("arc index needs k >= 3");
  return z_recur(2 * k - 5).specialize_ones({Var::x3, Var::x4});
}

}  // namespace a22::snake
