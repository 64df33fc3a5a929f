#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a22/dyck.hpp"
#include "a22/seed.hpp"
#include "a22/snake.hpp"
#include "test_util.hpp"

using namespace a22;
using namespace a22::seed;
using testutil::poly;

namespace {

// random seeds with unit (pure x1/x2 monomial) clusters, so every exchange
// division is exact regardless of the coefficient data
Seed random_seed(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coin(0, 1);
  Seed s;
  for (int i = 0; i < 2; ++i) {
    ExpVec e;
    e[Var::x1] = exp(rng);
    e[Var::x2] = exp(rng);
    s.cluster[i] = LaurentPoly::monomial(e);
    s.coeff[i] = TropMonomial{{exp(rng), exp(rng)}};
  }
  const int sign = coin(rng) ? 1 : -1;
  s.b = {{{0, 2 * sign}, {-2 * sign, 0}}};
  return s;
}

}  // namespace

TEST_CASE("tropical semifield laws") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> exp(-4, 4);
  for (int i = 0; i < 300; ++i) {
    const TropMonomial a{{exp(rng), exp(rng)}}, b{{exp(rng), exp(rng)}},
        c{{exp(rng), exp(rng)}};
    CHECK(a.oplus(b) == b.oplus(a));
    CHECK(a.oplus(b).oplus(c) == a.oplus(b.oplus(c)));
    CHECK(a.times(b) == b.times(a));
    CHECK(a.times(b.oplus(c)) == a.times(b).oplus(a.times(c)));
    CHECK(a.times(a.inverse()) == TropMonomial{});
  }
}

TEST_CASE("first mutation produces the worked variable") {
  const Seed s0 = initial_seed();
  const Seed s1 = mutate(s0, 1);
  CHECK(s1.cluster[0] == poly({{-1, 2, 0, 0, 0, 0, 1}, {-1, 0, 0, 0, 1, 0, 1}}));
  CHECK(s1.cluster[1] == LaurentPoly::variable(Var::x2));
  CHECK(s1.b[0][1] == -2);
  CHECK(s1.b[1][0] == 2);
  CHECK(s1.coeff[0] == TropMonomial{{-1, 0}});
  CHECK(s1.coeff[1] == TropMonomial{{2, 1}});
}

TEST_CASE("mutation is an involution") {
  const Seed s0 = initial_seed();
  CHECK(mutate(mutate(s0, 1), 1) == s0);
  CHECK(mutate(mutate(s0, 2), 2) == s0);
  CHECK_THROWS_AS(mutate(s0, 3), std::invalid_argument);

  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> dir(1, 2), len(0, 8);
  for (int trial = 0; trial < 120; ++trial) {
    Seed s = random_seed(rng);
    for (int k = 1; k <= 2; ++k) CHECK(mutate(mutate(s, k), k) == s);
    // seeds actually reachable by mutation
    Seed t = initial_seed();
    const int steps = len(rng);
    for (int i = 0; i < steps; ++i) t = mutate(t, dir(rng));
    for (int k = 1; k <= 2; ++k) CHECK(mutate(mutate(t, k), k) == t);
  }
}

TEST_CASE("coefficient-free exchange recurrence") {
  CHECK(coefficient_free_variable(1) == LaurentPoly::variable(Var::x1));
  CHECK(coefficient_free_variable(2) == LaurentPoly::variable(Var::x2));
  CHECK(coefficient_free_variable(3) ==
        poly({{-1, 2, 0, 0, 0, 0, 1}, {-1, 0, 0, 0, 0, 0, 1}}));
  CHECK(coefficient_free_variable(4) == poly({{-2, 3, 0, 0, 0, 0, 1},
                                              {-2, 1, 0, 0, 0, 0, 2},
                                              {-2, -1, 0, 0, 0, 0, 1},
                                              {0, -1, 0, 0, 0, 0, 1}}));
  CHECK(coefficient_free_variable(4).coefficient_sum() == 5);
  for (int m = 3; m <= 10; ++m)
    CHECK(coefficient_free_variable(m).coefficient_sum() == fib(2 * m - 3));
  CHECK_THROWS_AS(coefficient_free_variable(0), std::invalid_argument);
}

TEST_CASE("principal variables match the snake expansion") {
  CHECK(principal_variable(3) ==
        poly({{-1, 2, 0, 0, 0, 0, 1}, {-1, 0, 0, 0, 1, 0, 1}}));
  CHECK(principal_variable(4) == poly({{-2, -1, 0, 0, 2, 0, 1},
                                       {-2, 1, 0, 0, 1, 0, 2},
                                       {0, -1, 0, 0, 2, 1, 1},
                                       {-2, 3, 0, 0, 0, 0, 1}}));
  for (int k = 3; k <= 8; ++k)
    CHECK(principal_variable(k) == snake::cluster_variable_via_snake(k));
  CHECK_THROWS_AS(principal_variable(2), std::invalid_argument);
}

TEST_CASE("three coefficient-free routes agree") {
  for (int k = 2; k <= 9; ++k) {
    const LaurentPoly by_recurrence = coefficient_free_variable(k);
    CHECK(dyck::greedy_element(k - 2, k - 3, 2, 2) == by_recurrence);
    if (k >= 3)
      CHECK(snake::cluster_variable_via_snake(k).specialize_ones(
                {Var::y1, Var::y2}) == by_recurrence);
  }
}

TEST_CASE("laurent phenomenon holds along deep mutation") {
  // every exchange division along the way must stay exact
  CHECK_NOTHROW(principal_variable(12));
  CHECK_NOTHROW(coefficient_free_variable(14));
}
