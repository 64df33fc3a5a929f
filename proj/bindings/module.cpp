#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

#include "a22/bijection.hpp"
#include "a22/dyck.hpp"
#include "a22/jsonio.hpp"
#include "a22/laurent.hpp"
#include "a22/nondec.hpp"
#include "a22/render.hpp"
#include "a22/seed.hpp"
#include "a22/snake.hpp"

namespace py = pybind11;
using namespace a22;

namespace {

py::int_ to_py_int(const Int& v) {
  std::ostringstream os;
  os << v;
  return py::int_(py::str(os.str()));
}

Var var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  throw std::invalid_argument("unknown variable: " + name);
}

std::vector<Var> vars_from_names(const std::vector<std::string>& names) {
  std::vector<Var> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(var_from_name(n));
  return out;
}

snake::PerfectMatching matching_from_names(
    int n, const std::vector<std::string>& names) {
  snake::PerfectMatching m;
  m.n = n;
  for (const auto& s : names) m.edges.push_back(snake::Edge::parse(s));
  std::sort(m.edges.begin(), m.edges.end(),
            [](const snake::Edge& a, const snake::Edge& b) {
              return std::pair(a.pos, a.kind) < std::pair(b.pos, b.kind);
            });
  const snake::SnakeGraph g = snake::build(n);
  if (!snake::is_perfect_matching(g, m))
    throw std::invalid_argument("edge list is not a perfect matching of H_n");
  return m;
}

std::vector<std::string> edge_names(const snake::PerfectMatching& m) {
  std::vector<std::string> out;
  for (const auto& e : m.edges) out.push_back(e.name());
  return out;
}

}  // namespace

PYBIND11_MODULE(_a22, m) {
  m.doc() =
      "exact combinatorics of the rank-2 affine cluster algebra A(2,2): "
      "snake-graph matchings, compatible pairs, nondecreasing Dyck paths";

  py::register_exception<NonExactDivision>(m, "NonExactDivision");
  py::register_exception<bij::IncompatiblePair>(m, "IncompatiblePair");
  py::register_exception<nondec::Unclassifiable>(m, "Unclassifiable");

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<long long>(), py::arg("constant") = 0)
      .def_static("variable",
                  [](const std::string& name, int power) {
                    return LaurentPoly::variable(var_from_name(name), power);
                  },
                  py::arg("name"), py::arg("power") = 1)
      .def_static("from_json",
                  [](const std::string& text) {
                    return io::laurent_from_json(io::parse_document(text));
                  })
      .def("to_json", [](const LaurentPoly& p) { return io::dump(io::to_json(p)); })
      .def("term_count", &LaurentPoly::term_count)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("coefficient_sum",
           [](const LaurentPoly& p) { return to_py_int(p.coefficient_sum()); })
      .def("specialize_ones",
           [](const LaurentPoly& p, const std::vector<std::string>& names) {
             return p.specialize_ones(vars_from_names(names));
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &LaurentPoly::str)
      .def("__repr__",
           [](const LaurentPoly& p) { return "LaurentPoly(" + p.str() + ")"; });

  m.def("divide_exact", &divide_exact, py::arg("p"), py::arg("q"));
  m.def("fib", [](int k) { return to_py_int(fib(k)); });

  py::class_<snake::PerfectMatching>(m, "PerfectMatching")
      .def(py::init(&matching_from_names), py::arg("n"), py::arg("edges"))
      .def_readonly("n", &snake::PerfectMatching::n)
      .def_property_readonly("edges", &edge_names)
      .def("to_json",
           [](const snake::PerfectMatching& p) { return io::dump(io::to_json(p)); })
      .def(py::self == py::self)
      .def("__repr__", [](const snake::PerfectMatching& p) {
        return io::dump(io::to_json(p));
      });

  m.def("count_matchings", [](int n) { return to_py_int(snake::count_matchings(n)); });
  m.def("enumerate_matchings",
        [](int n) { return snake::enumerate_matchings(snake::build(n)); });
  m.def("p_minus", [](int n) { return snake::p_minus(snake::build(n)); });
  m.def("p_plus", [](int n) { return snake::p_plus(snake::build(n)); });
  m.def("weight", [](const snake::PerfectMatching& p) {
    return snake::weight(snake::build(p.n), p);
  });
  m.def("y_monomial", [](const snake::PerfectMatching& p) {
    return snake::y_monomial(snake::build(p.n), p);
  });
  m.def("symmetric_difference_tiles", [](const snake::PerfectMatching& p) {
    return snake::symmetric_difference_tiles(snake::build(p.n), p);
  });
  m.def("z_direct", &snake::z_direct);
  m.def("z_recur", &snake::z_recur);
  m.def("cluster_variable_via_snake", &snake::cluster_variable_via_snake);

  py::class_<dyck::CompatiblePair>(m, "CompatiblePair")
      .def(py::init([](int n, std::vector<int> s1, std::vector<int> s2) {
             dyck::CompatiblePair sel{n, std::move(s1), std::move(s2)};
             std::sort(sel.s1.begin(), sel.s1.end());
             std::sort(sel.s2.begin(), sel.s2.end());
             return sel;
           }),
           py::arg("n"), py::arg("s1"), py::arg("s2"))
      .def_readonly("n", &dyck::CompatiblePair::n)
      .def_readonly("s1", &dyck::CompatiblePair::s1)
      .def_readonly("s2", &dyck::CompatiblePair::s2)
      .def("to_json",
           [](const dyck::CompatiblePair& s) { return io::dump(io::to_json(s)); })
      .def(py::self == py::self)
      .def("__repr__", [](const dyck::CompatiblePair& s) {
        return io::dump(io::to_json(s));
      });

  m.def("count_compatible", [](int n) { return to_py_int(dyck::count_compatible(n)); });
  m.def("enumerate_compatible", &dyck::enumerate_compatible);
  m.def("is_compatible_definition",
        py::overload_cast<const dyck::CompatiblePair&, int, int>(
            &dyck::is_compatible_definition),
        py::arg("sel"), py::arg("b") = 2, py::arg("c") = 2);
  m.def("is_compatible_max", &dyck::is_compatible_max);
  m.def("is_compatible_fast", &dyck::is_compatible_fast);
  m.def("greedy_element", &dyck::greedy_element, py::arg("a1"), py::arg("a2"),
        py::arg("b") = 2, py::arg("c") = 2);
  m.def("sigma1", &dyck::sigma1, py::arg("a1"), py::arg("a2"),
        py::arg("b") = 2, py::arg("c") = 2);
  m.def("sigma2", &dyck::sigma2, py::arg("a1"), py::arg("a2"),
        py::arg("b") = 2, py::arg("c") = 2);

  py::class_<nondec::NonDecPath>(m, "NonDecPath")
      .def(py::init([](const std::vector<std::pair<int, int>>& mountains) {
             nondec::NonDecPath p;
             for (const auto& [d, e] : mountains) p.mountains.push_back({d, e});
             nondec::validate(p);
             return p;
           }),
           py::arg("mountains"))
      .def_property_readonly("mountains",
                             [](const nondec::NonDecPath& p) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& m : p.mountains)
                                 out.emplace_back(m.d, m.e);
                               return out;
                             })
      .def("half_length", &nondec::NonDecPath::half_length)
      .def("to_json",
           [](const nondec::NonDecPath& p) { return io::dump(io::to_json(p)); })
      .def(py::self == py::self)
      .def("__repr__", [](const nondec::NonDecPath& p) {
        return io::dump(io::to_json(p));
      });

  m.def("count_nondec", [](int n) { return to_py_int(nondec::count_nondec(n)); });
  m.def("enumerate_nondec", &nondec::enumerate_nondec);
  m.def("from_steps", &nondec::from_steps);
  m.def("to_steps", &nondec::to_steps);
  m.def("classify",
        [](const nondec::NonDecPath& p) { return nondec::to_string(nondec::classify(p)); });
  m.def("map_A", &nondec::map_A);
  m.def("map_A_inv", &nondec::map_A_inv);
  m.def("map_B", &nondec::map_B);
  m.def("map_B_inv", &nondec::map_B_inv);
  m.def("map_C", &nondec::map_C);
  m.def("map_C_inv", &nondec::map_C_inv);

  m.def("phi", &bij::phi);
  m.def("phi_inv", &bij::phi_inv);
  m.def("theta", &bij::theta);
  m.def("theta_inv", &bij::theta_inv);
  m.def("psi", &bij::psi);
  m.def("pair_to_letters", &bij::pair_to_letters);
  m.def("letters_to_pair", &bij::letters_to_pair);
  m.def("matching_to_letters", &bij::matching_to_letters);

  py::class_<seed::Seed>(m, "Seed")
      .def_static("initial", &seed::initial_seed)
      .def("mutate", [](const seed::Seed& s, int k) { return seed::mutate(s, k); },
           py::arg("k"))
      .def("cluster",
           [](const seed::Seed& s, int i) {
             if (i < 1 || i > 2) throw std::out_of_range("cluster slot is 1 or 2");
             return s.cluster[i - 1];
           },
           py::arg("slot"))
      .def(py::self == py::self);

  m.def("coefficient_free_variable", &seed::coefficient_free_variable);
  m.def("principal_variable", &seed::principal_variable);

  m.def("render_pair_ascii", &render::pair_ascii);
  m.def("render_pair_svg", &render::pair_svg);
  m.def("render_path_ascii", &render::path_ascii);
  m.def("render_path_svg", &render::path_svg);
}
