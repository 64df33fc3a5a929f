#include "a22/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "a22/bijection.hpp"
#include "a22/dyck.hpp"
#include "a22/jsonio.hpp"
#include "a22/nondec.hpp"
#include "a22/render.hpp"
#include "a22/seed.hpp"
#include "a22/snake.hpp"
#include "a22/verify.hpp"

namespace a22::cli {

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::Json read_object(std::istream& in) {
  const std::string text = read_all(in);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw DataError("expected a JSON object on standard input");
  return io::parse_document(text);
}

int do_count(const std::string& model, int n, bool check, std::ostream& out) {
  Int value;
  int fib_index;
  if (model == "matchings") {
    value = snake::count_matchings(n);
    fib_index = n + 2;
  } else if (model == "pairs") {
    value = dyck::count_compatible(n);
    fib_index = 2 * n + 3;
  } else {
    value = nondec::count_nondec(n);
    fib_index = 2 * n - 1;
  }
  if (!check) {
    out << value << "\n";
    return 0;
  }
  const Int expected = fib(fib_index);
  out << value << " F_" << fib_index << "=" << expected << " "
      << (value == expected ? "ok" : "MISMATCH") << "\n";
  return value == expected ? 0 : 1;
}

int do_expand(const std::string& via, int k, std::ostream& out) {
  LaurentPoly p;
  if (via == "snake")
    p = snake::cluster_variable_via_snake(k);
  else if (via == "mutation")
    p = seed::principal_variable(k);
  else
    p = dyck::greedy_element(k - 2, k - 3, 2, 2);
  out << io::dump(io::to_json(p)) << "\n";
  return 0;
}

int do_enumerate(const std::string& model, int n, std::ostream& out) {
  if (model == "matchings") {
    for (const auto& m : snake::enumerate_matchings(snake::build(n)))
      out << io::dump(io::to_json(m)) << "\n";
  } else if (model == "pairs") {
    for (const auto& sel : dyck::enumerate_compatible(n))
      out << io::dump(io::to_json(sel)) << "\n";
  } else {
    for (const auto& p : nondec::enumerate_nondec(n))
      out << io::dump(io::to_json(p)) << "\n";
  }
  return 0;
}

int do_map(const std::string& from, const std::string& apply, std::istream& in,
           std::ostream& out) {
  static const std::map<std::string, std::string> kDomain = {
      {"phi", "matching"},
      {"phi-inv", "pair"},
      {"theta", "pair"},
      {"theta-inv", "path"},
      {"psi", "matching"}};
  if (kDomain.at(apply) != from)
    throw CLI::ValidationError("--apply " + apply + " consumes --from " +
                               kDomain.at(apply));
  const io::Json j = read_object(in);
  io::Json result;
  if (apply == "phi")
    result = io::to_json(bij::phi(io::matching_from_json(j)));
  else if (apply == "phi-inv")
    result = io::to_json(bij::phi_inv(io::pair_from_json(j)));
  else if (apply == "theta")
    result = io::to_json(bij::theta(io::pair_from_json(j)));
  else if (apply == "theta-inv")
    result = io::to_json(bij::theta_inv(io::path_from_json(j)));
  else
    result = io::to_json(bij::psi(io::matching_from_json(j)));
  out << io::dump(result) << "\n";
  return 0;
}

int do_verify(const std::string& suite, int max_n, std::ostream& out) {
  std::vector<verify::Check> checks;
  if (suite == "counts")
    checks = verify::counts_suite(max_n);
  else if (suite == "oracles")
    checks = verify::oracles_suite(max_n);
  else if (suite == "bijections")
    checks = verify::bijections_suite(max_n);
  else
    checks = verify::all_suites(max_n);
  bool all_ok = true;
  for (const verify::Check& c : checks) {
    out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail
        << "\n";
    all_ok = all_ok && c.ok;
  }
  out << (all_ok ? "verification passed" : "verification FAILED") << " ("
      << checks.size() << " checks, max-n " << max_n << ")\n";
  return all_ok ? 0 : 1;
}

int do_render(const std::string& model, const std::string& format,
              std::istream& in, std::ostream& out) {
  const io::Json j = read_object(in);
  if (model == "pair") {
    const dyck::CompatiblePair sel = io::pair_from_json(j);
    out << (format == "ascii" ? render::pair_ascii(sel)
                              : render::pair_svg(sel));
  } else {
    const nondec::NonDecPath p = io::path_from_json(j);
    out << (format == "ascii" ? render::path_ascii(p) : render::path_svg(p));
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact combinatorics of the rank-2 affine cluster algebra A(2,2)"};
  app.require_subcommand(1);

  std::string model, via = "snake", apply, format = "ascii", suite = "all";
  int n = 1, k = 3, a1 = 0, a2 = 0, b = 2, c = 2, max_n = 7;
  bool check = false;

  auto* count = app.add_subcommand("count", "count objects of one model");
  count->add_option("--model", model, "matchings|pairs|nondec")
      ->required()
      ->check(CLI::IsMember({"matchings", "pairs", "nondec"}));
  count->add_option("--n", n, "model size")->required();
  count->add_flag("--check", check, "also print and compare the Fibonacci value");

  auto* expand = app.add_subcommand("expand", "expand a cluster variable");
  expand->add_option("--via", via, "snake|mutation|greedy")
      ->required()
      ->check(CLI::IsMember({"snake", "mutation", "greedy"}));
  expand->add_option("--k", k, "cluster variable index (k >= 3)")->required();

  auto* greedy =
      app.add_subcommand("greedy", "greedy element x[a1,a2] in A(b,c)");
  greedy->add_option("--a1", a1, "first index")->required();
  greedy->add_option("--a2", a2, "second index")->required();
  greedy->add_option("--b", b, "exchange exponent b (default 2)");
  greedy->add_option("--c", c, "exchange exponent c (default 2)");

  auto* enumerate =
      app.add_subcommand("enumerate", "list all objects as JSON lines");
  enumerate->add_option("--model", model, "matchings|pairs|nondec")
      ->required()
      ->check(CLI::IsMember({"matchings", "pairs", "nondec"}));
  enumerate->add_option("--n", n, "model size")->required();

  auto* map_cmd = app.add_subcommand(
      "map", "apply a bijection to the JSON object on standard input");
  map_cmd->add_option("--from", model, "matching|pair|path")
      ->required()
      ->check(CLI::IsMember({"matching", "pair", "path"}));
  map_cmd->add_option("--apply", apply, "phi|phi-inv|theta|theta-inv|psi")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "theta", "theta-inv", "psi"}));

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", suite, "counts|oracles|bijections|all")
      ->check(CLI::IsMember({"counts", "oracles", "bijections", "all"}));
  verify_cmd->add_option("--max-n", max_n, "family size bound (default 7)");

  auto* render_cmd = app.add_subcommand(
      "render", "draw the JSON object on standard input");
  render_cmd->add_option("--model", model, "pair|nondec")
      ->required()
      ->check(CLI::IsMember({"pair", "nondec"}));
  render_cmd->add_option("--format", format, "ascii|svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (count->parsed()) return do_count(model, n, check, out);
    if (expand->parsed()) return do_expand(via, k, out);
    if (greedy->parsed()) {
      out << io::dump(io::to_json(dyck::greedy_element(a1, a2, b, c))) << "\n";
      return 0;
    }
    if (enumerate->parsed()) return do_enumerate(model, n, out);
    if (map_cmd->parsed()) return do_map(model, apply, in, out);
    if (verify_cmd->parsed()) return do_verify(suite, max_n, out);
    if (render_cmd->parsed()) return do_render(model, format, in, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace a22::cli
