// Acceptance suite: the ten exit criteria, one pass/fail line each.
// Exact equality throughout; no tolerances anywhere.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "a22/bijection.hpp"
#include "a22/dyck.hpp"
#include "a22/jsonio.hpp"
#include "a22/nondec.hpp"
#include "a22/seed.hpp"
#include "a22/snake.hpp"

using namespace a22;

namespace {

struct Criterion {
  std::string title;
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

// ---- criterion 1 ------------------------------------------------------

std::uint64_t brute_force_matching_count(int n) {
  const snake::SnakeGraph g = snake::build(n);
  const std::vector<snake::Edge> edges = g.all_edges();
  const int m = static_cast<int>(edges.size());
  const int want = n + 1;
  // vertex bitmasks per edge: A_i at bit i, B_i at bit n+1+i
  std::vector<std::uint64_t> vmask(m);
  for (int i = 0; i < m; ++i) {
    const snake::Edge& e = edges[i];
    switch (e.kind) {
      case snake::Edge::kRung:
        vmask[i] = (1ull << e.pos) | (1ull << (n + 1 + e.pos));
        break;
      case snake::Edge::kSideA:
        vmask[i] = (1ull << e.pos) | (1ull << (e.pos + 1));
        break;
      case snake::Edge::kSideB:
        vmask[i] = (1ull << (n + 1 + e.pos)) | (1ull << (n + 1 + e.pos + 1));
        break;
    }
  }
  const std::uint64_t full = (1ull << (2 * (n + 1))) - 1;
  std::uint64_t count = 0;
  // Gosper's hack over all size-(n+1) subsets of the 3n+1 edges
  std::uint64_t subset = (1ull << want) - 1;
  const std::uint64_t limit = 1ull << m;
  while (subset < limit) {
    std::uint64_t cover = 0;
    bool okay = true;
    for (std::uint64_t bits = subset; bits; bits &= bits - 1) {
      const int i = __builtin_ctzll(bits);
      if (cover & vmask[i]) {
        okay = false;
        break;
      }
      cover |= vmask[i];
    }
    if (okay && cover == full) ++count;
    const std::uint64_t c = subset & -subset;
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return count;
}

Criterion criterion1() {
  Criterion c{"matching counts |M(H_n)| = F_{n+2}, n=1..20; subset oracle n<=10"};
  for (int n = 1; n <= 20; ++n)
    c.require(snake::count_matchings(n) == fib(n + 2),
              "DP count mismatch at n=" + std::to_string(n));
  for (int n = 1; n <= 12; ++n)
    c.require(Int(snake::enumerate_matchings(snake::build(n)).size()) ==
                  fib(n + 2),
              "enumeration mismatch at n=" + std::to_string(n));
  for (int n = 1; n <= 10; ++n)
    c.require(Int(brute_force_matching_count(n)) == fib(n + 2),
              "subset oracle mismatch at n=" + std::to_string(n));
  return c;
}

// ---- criterion 2 ------------------------------------------------------

Criterion criterion2() {
  Criterion c{"expansion identity z_direct(n) = z_recur(n), n=1..14"};
  for (int n = 1; n <= 14; ++n)
    c.require(snake::z_direct(n) == snake::z_recur(n),
              "mismatch at n=" + std::to_string(n));
  return c;
}

// ---- criterion 3 ------------------------------------------------------

Criterion criterion3() {
  Criterion c{"triple-oracle agreement for k=3..8"};
  for (int k = 3; k <= 8; ++k) {
    const LaurentPoly via_snake = snake::cluster_variable_via_snake(k);
    c.require(via_snake == seed::principal_variable(k),
              "snake != mutation at k=" + std::to_string(k));
    const LaurentPoly no_y = via_snake.specialize_ones({Var::y1, Var::y2});
    c.require(no_y == seed::coefficient_free_variable(k),
              "y->1 != coefficient-free at k=" + std::to_string(k));
    c.require(no_y == dyck::greedy_element(k - 2, k - 3, 2, 2),
              "y->1 != greedy at k=" + std::to_string(k));
  }
  return c;
}

// ---- criterion 4 ------------------------------------------------------

Criterion criterion4() {
  Criterion c{"coefficient sums |x_{gamma_k}| = F_{2k-3}, k=3..10"};
  for (int k = 3; k <= 10; ++k)
    c.require(snake::cluster_variable_via_snake(k).coefficient_sum() ==
                  fib(2 * k - 3),
              "mismatch at k=" + std::to_string(k));
  return c;
}

// ---- criteria 5 and 6 -------------------------------------------------

template <typename Pred>
std::uint64_t count_subset_pairs(int n, Pred keep) {
  std::uint64_t count = 0;
  for (unsigned m1 = 0; m1 < (1u << (n + 1)); ++m1)
    for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
      dyck::CompatiblePair sel;
      sel.n = n;
      for (int i = 0; i <= n; ++i)
        if (m1 >> i & 1) sel.s1.push_back(i);
      for (int j = 1; j <= n; ++j)
        if (m2 >> (j - 1) & 1) sel.s2.push_back(j);
      if (keep(sel)) ++count;
    }
  return count;
}

Criterion criterion5() {
  Criterion c{"compatible-pair counts |T_n| = F_{2n+3}, n=0..10; Def 2.24 brute force n<=5"};
  for (int n = 0; n <= 10; ++n) {
    const Int cnt = Int(dyck::enumerate_compatible(n).size());
    c.require(cnt == fib(2 * n + 3), "count mismatch at n=" + std::to_string(n));
    if (n >= 2)
      c.require(cnt == 3 * Int(dyck::enumerate_compatible(n - 1).size()) -
                           Int(dyck::enumerate_compatible(n - 2).size()),
                "recurrence breaks at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t brute = count_subset_pairs(n, [](const auto& sel) {
      return dyck::is_compatible_definition(sel, 2, 2);
    });
    c.require(Int(brute) == fib(2 * n + 3),
              "defining predicate count mismatch at n=" + std::to_string(n));
  }
  return c;
}

Criterion criterion6() {
  Criterion c{"predicate equivalence definition = max = fast, all pairs n<=5"};
  for (int n = 0; n <= 5; ++n) {
    for (unsigned m1 = 0; m1 < (1u << (n + 1)); ++m1)
      for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
        dyck::CompatiblePair sel;
        sel.n = n;
        for (int i = 0; i <= n; ++i)
          if (m1 >> i & 1) sel.s1.push_back(i);
        for (int j = 1; j <= n; ++j)
          if (m2 >> (j - 1) & 1) sel.s2.push_back(j);
        const bool d = dyck::is_compatible_definition(sel, 2, 2);
        c.require(d == dyck::is_compatible_max(sel) &&
                      d == dyck::is_compatible_fast(sel),
                  "predicates disagree at n=" + std::to_string(n));
        if (!c.ok) return c;
      }
  }
  return c;
}

// ---- criterion 7 ------------------------------------------------------

Criterion criterion7() {
  Criterion c{"nondecreasing counts |S_n| = F_{2n-1}, n=2..12; class sizes n<=8"};
  for (int n = 2; n <= 12; ++n) {
    c.require(Int(nondec::enumerate_nondec(n).size()) == fib(2 * n - 1),
              "count mismatch at n=" + std::to_string(n));
    if (n >= 4)
      c.require(nondec::count_nondec(n) == 3 * nondec::count_nondec(n - 1) -
                                               nondec::count_nondec(n - 2),
                "recurrence breaks at n=" + std::to_string(n));
  }
  std::vector<long long> b_sizes(9, 0), c_sizes(9, 0);
  for (int n = 2; n <= 8; ++n) {
    long long a = 0, b = 0, cc = 0;
    for (const auto& p : nondec::enumerate_nondec(n)) {
      switch (nondec::classify(p)) {
        case nondec::PathClass::A: ++a; break;
        case nondec::PathClass::B: ++b; break;
        case nondec::PathClass::C: ++cc; break;
      }
    }
    b_sizes[n] = b;
    c_sizes[n] = cc;
    if (n >= 3) {
      c.require(Int(a) == nondec::count_nondec(n - 1) &&
                    Int(b) == nondec::count_nondec(n - 1),
                "|A_n| or |B_n| mismatch at n=" + std::to_string(n));
      c.require(cc == b_sizes[n - 1] + c_sizes[n - 1],
                "|C_n| mismatch at n=" + std::to_string(n));
    }
  }
  return c;
}

// ---- criterion 8 ------------------------------------------------------

Criterion criterion8() {
  Criterion c{"bijection round trips and psi = theta after phi, n<=7"};
  for (int n = 0; n <= 7; ++n) {
    const snake::SnakeGraph g = snake::build(2 * n + 1);
    for (const auto& p : snake::enumerate_matchings(g)) {
      const dyck::CompatiblePair sel = bij::phi(p);
      c.require(bij::phi_inv(sel) == p,
                "phi round trip fails at n=" + std::to_string(n));
      c.require(bij::psi(p) == bij::theta(sel),
                "psi != theta(phi) at n=" + std::to_string(n));
      if (!c.ok) return c;
    }
    for (const auto& sel : dyck::enumerate_compatible(n)) {
      c.require(bij::phi(bij::phi_inv(sel)) == sel,
                "phi inverse round trip fails at n=" + std::to_string(n));
      c.require(bij::theta_inv(bij::theta(sel)) == sel,
                "theta round trip fails at n=" + std::to_string(n));
      if (!c.ok) return c;
    }
    for (const auto& w : nondec::enumerate_nondec(n + 2)) {
      c.require(bij::theta(bij::theta_inv(w)) == w,
                "theta inverse round trip fails at n=" + std::to_string(n));
      if (!c.ok) return c;
    }
  }
  return c;
}

// ---- criterion 9 ------------------------------------------------------

Criterion criterion9() {
  Criterion c{"paper worked examples byte-for-byte"};

  c.require(io::dump(io::to_json(snake::z_direct(1))) ==
                "[{\"exp\":[-1,0,1,1,1,0],\"coef\":1},"
                "{\"exp\":[-1,2,0,0,0,0],\"coef\":1}]",
            "z_1 bytes differ");
  c.require(io::dump(io::to_json(snake::z_direct(2))) ==
                "[{\"exp\":[1,-1,1,0,1,1],\"coef\":1},"
                "{\"exp\":[-1,-1,2,1,1,0],\"coef\":1},"
                "{\"exp\":[-1,1,1,0,0,0],\"coef\":1}]",
            "z_2 bytes differ");
  c.require(io::dump(io::to_json(snake::z_direct(3))) ==
                "[{\"exp\":[0,-1,1,1,2,1],\"coef\":1},"
                "{\"exp\":[-2,-1,2,2,2,0],\"coef\":1},"
                "{\"exp\":[-2,1,1,1,1,0],\"coef\":2},"
                "{\"exp\":[-2,3,0,0,0,0],\"coef\":1}]",
            "z_3 bytes differ");

  snake::PerfectMatching example;
  example.n = 13;
  for (const char* name :
       {"sideA:0", "sideB:0", "rung:2", "rung:3", "sideA:4", "sideB:4",
        "rung:6", "rung:7", "rung:8", "sideA:9", "sideB:9", "sideA:11",
        "sideB:11", "rung:13"})
    example.edges.push_back(snake::Edge::parse(name));
  std::sort(example.edges.begin(), example.edges.end(),
            [](const snake::Edge& a, const snake::Edge& b) {
              return std::pair(a.pos, a.kind) < std::pair(b.pos, b.kind);
            });
  const dyck::CompatiblePair sel = bij::phi(example);
  c.require(sel.s1 == std::vector<int>{0, 2} &&
                sel.s2 == std::vector<int>{5, 6},
            "phi image of the worked matching differs");
  c.require(bij::phi_inv(sel) == example, "phi inverse differs");
  c.require(bij::pair_to_letters(sel) == "UOUOOVV", "letters differ");
  c.require(io::dump(io::to_json(bij::theta(sel))) ==
                "{\"mountains\":[[2,2],[2,2],[3,1],[1,3]]}",
            "theta image bytes differ");

  const dyck::MaxDyckPath path = dyck::build_maximal(6, 4);
  const dyck::Subpath ab =
      dyck::subpath(path, path.position_of({5, 2}), path.position_of({2, 1}));
  std::string word;
  for (int pos : ab.edges) {
    if (!word.empty()) word += ",";
    word += path.step_at(pos).name();
  }
  c.require(word == "v3,u6,v4,u1,u2,v1", "subpath edges differ: " + word);
  const std::vector<dyck::Point> interior = dyck::interior_points(path, ab);
  const std::vector<dyck::Point> expected = {
      {5, 3}, {6, 3}, {0, 0}, {1, 0}, {2, 0}};
  c.require(interior == expected, "interior point set differs");
  return c;
}

// ---- criterion 10 -----------------------------------------------------

Criterion criterion10() {
  Criterion c{"algebra properties: ring axioms, exact division, involution"};
  std::mt19937 rng(112233);
  std::uniform_int_distribution<int> lau(-2, 2), pos(0, 2), coef(-5, 5),
      nterms(0, 4);
  auto random_poly = [&](int max_terms) {
    LaurentPoly p;
    const int k = std::uniform_int_distribution<int>(0, max_terms)(rng);
    for (int i = 0; i < k; ++i) {
      ExpVec e;
      e.e = {lau(rng), lau(rng), pos(rng), pos(rng), pos(rng), pos(rng)};
      p += LaurentPoly::monomial(e, coef(rng));
    }
    return p;
  };
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly p = random_poly(4), q = random_poly(4), r = random_poly(4);
    c.require((p + q) + r == p + (q + r), "associativity of + fails");
    c.require(p * q == q * p, "commutativity of * fails");
    c.require(p * (q + r) == p * q + p * r, "distributivity fails");
    LaurentPoly divisor = random_poly(2);
    while (divisor.is_zero()) divisor = random_poly(2);
    c.require(divide_exact(p * divisor, divisor) == p,
              "exact division round trip fails");
    if (!c.ok) return c;
  }

  std::uniform_int_distribution<int> exp(-3, 3), coin(0, 1), dir(1, 2);
  for (int i = 0; i < 100; ++i) {
    seed::Seed s;
    for (int j = 0; j < 2; ++j) {
      ExpVec e;
      e[Var::x1] = exp(rng);
      e[Var::x2] = exp(rng);
      s.cluster[j] = LaurentPoly::monomial(e);
      s.coeff[j] = seed::TropMonomial{{exp(rng), exp(rng)}};
    }
    const int sign = coin(rng) ? 1 : -1;
    s.b = {{{0, 2 * sign}, {-2 * sign, 0}}};
    for (int k = 1; k <= 2; ++k)
      c.require(seed::mutate(seed::mutate(s, k), k) == s,
                "mutation involution fails on a random seed");
    seed::Seed t = seed::initial_seed();
    for (int step = 0; step < 6; ++step) t = seed::mutate(t, dir(rng));
    for (int k = 1; k <= 2; ++k)
      c.require(seed::mutate(seed::mutate(t, k), k) == t,
                "mutation involution fails on a reachable seed");
    if (!c.ok) return c;
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion> results = {
      criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
      criterion6(), criterion7(), criterion8(), criterion9(), criterion10()};
  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << c.title;
    if (!c.ok) std::cout << " -- " << c.detail;
    std::cout << "\n";
    all_ok = all_ok && c.ok;
  }
  std::cout << (all_ok ? "acceptance suite passed" : "acceptance suite FAILED")
            << "\n";
  return all_ok ? 0 : 1;
}
