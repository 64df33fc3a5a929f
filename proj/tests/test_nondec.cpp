#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "a22/nondec.hpp"

using namespace a22;
using namespace a22::nondec;

namespace {

NonDecPath path(std::initializer_list<std::pair<int, int>> ms) {
  NonDecPath p;
  for (const auto& [d, e] : ms) p.mountains.push_back({d, e});
  return p;
}

// Independent oracle: filter every step word of length 2n through from_steps.
std::vector<NonDecPath> brute_force_paths(int n) {
  std::vector<NonDecPath> out;
  for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
    std::string word;
    for (int i = 0; i < 2 * n; ++i) word += (mask >> i & 1) ? '\\' : '/';
    try {
      out.push_back(from_steps(word));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("step words round trip") {
  // the length-16 figure path
  const std::string fig = "//\\\\//\\\\///\\/\\\\\\";
  CHECK(from_steps(fig) == path({{2, 2}, {2, 2}, {3, 1}, {1, 3}}));
  CHECK(to_steps(path({{2, 2}, {2, 2}, {3, 1}, {1, 3}})) == fig);

  CHECK(from_steps("/\\") == path({{1, 1}}));
  CHECK_THROWS_AS(from_steps("/\\\\"), std::invalid_argument);
  CHECK_THROWS_AS(from_steps("\\/"), std::invalid_argument);
  CHECK_THROWS_AS(from_steps("/\\\\/"), std::invalid_argument);
  CHECK_THROWS_AS(from_steps(""), std::invalid_argument);
  CHECK_THROWS_AS(from_steps("/x"), std::invalid_argument);
  // decreasing valley: (3,1) then (1,2) then (1,2) falls from 2 to 1
  CHECK_THROWS_AS(from_steps("///\\/\\\\/\\\\"), std::invalid_argument);
}

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(path({{2, 1}, {1, 2}})));
  CHECK_THROWS_AS(validate(path({{1, 2}, {2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(path({{1, 1}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(path({{0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(NonDecPath{}), std::invalid_argument);
  CHECK(path({{2, 2}, {3, 1}, {1, 3}}).valley_altitudes() ==
        std::vector<int>{0, 2});
}

TEST_CASE("enumeration") {
  const auto s2 = enumerate_nondec(2);
  REQUIRE(s2.size() == 2);
  CHECK(std::count(s2.begin(), s2.end(), path({{2, 2}})) == 1);
  CHECK(std::count(s2.begin(), s2.end(), path({{1, 1}, {1, 1}})) == 1);

  CHECK(enumerate_nondec(3).size() == 5);

  for (int n = 2; n <= 12; ++n) {
    CHECK(count_nondec(n) == fib(2 * n - 1));
    if (n <= 9) CHECK(Int(enumerate_nondec(n).size()) == fib(2 * n - 1));
    if (n >= 4)
      CHECK(count_nondec(n) == 3 * count_nondec(n - 1) - count_nondec(n - 2));
  }
}

TEST_CASE("enumeration against the step-word filter") {
  for (int n = 1; n <= 7; ++n) {
    auto fast = enumerate_nondec(n);
    auto slow = brute_force_paths(n);
    REQUIRE(fast.size() == slow.size());
    auto key = [](const NonDecPath& p) {
      std::vector<std::pair<int, int>> k;
      for (const auto& m : p.mountains) k.emplace_back(m.d, m.e);
      return k;
    };
    std::sort(fast.begin(), fast.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::sort(slow.begin(), slow.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    CHECK(fast == slow);
  }
}

TEST_CASE("round trips through step words") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_nondec(n)) CHECK(from_steps(to_steps(p)) == p);
}

TEST_CASE("classification") {
  CHECK(classify(path({{2, 2}, {2, 2}, {3, 1}, {1, 3}})) == PathClass::C);
  CHECK(classify(path({{3, 3}})) == PathClass::A);
  CHECK(classify(path({{2, 2}, {1, 2}})) == PathClass::B);
  CHECK_THROWS_AS(classify(path({{1, 1}})), Unclassifiable);

  // partition: every path of half-length >= 2 lands in exactly one class
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : enumerate_nondec(n)) CHECK_NOTHROW(classify(p));
}

TEST_CASE("class maps on the worked cases") {
  CHECK(map_A(path({{3, 3}})) == path({{2, 2}}));
  CHECK(map_A(path({{2, 2}, {2, 2}})) == path({{2, 2}, {1, 1}}));
  CHECK(map_B(path({{2, 2}, {1, 2}})) == path({{2, 3}}));
  CHECK(map_B(path({{1, 1}, {1, 1}})) == path({{1, 1}}));
  CHECK(map_C(path({{3, 1}, {1, 3}})) == path({{2, 1}, {1, 2}}));
  const NonDecPath small_c = map_C(path({{2, 1}, {1, 2}}));
  CHECK(small_c == path({{1, 1}, {1, 1}}));
  CHECK(classify(small_c) == PathClass::B);

  CHECK_THROWS_AS(map_A(path({{2, 2}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(map_B(path({{3, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(map_C(path({{2, 2}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(map_C_inv(path({{3, 3}})), std::invalid_argument);
}

TEST_CASE("class maps are mutually inverse and land in range") {
  for (int n = 3; n <= 8; ++n) {
    long long a = 0, b = 0, c = 0;
    for (const auto& p : enumerate_nondec(n)) {
      switch (classify(p)) {
        case PathClass::A: {
          ++a;
          const NonDecPath q = map_A(p);
          CHECK(q.half_length() == n - 1);
          CHECK(map_A_inv(q) == p);
          break;
        }
        case PathClass::B: {
          ++b;
          const NonDecPath q = map_B(p);
          CHECK(q.half_length() == n - 1);
          CHECK(map_B_inv(q) == p);
          break;
        }
        case PathClass::C: {
          ++c;
          const NonDecPath q = map_C(p);
          CHECK(q.half_length() == n - 1);
          CHECK(classify(q) != PathClass::A);
          CHECK(map_C_inv(q) == p);
          break;
        }
      }
    }
    // Lemma-style size relations
    long long b_prev = 0, c_prev = 0;
    for (const auto& p : enumerate_nondec(n - 1)) {
      if (n - 1 < 2) break;
      const PathClass cls = classify(p);
      if (cls == PathClass::B) ++b_prev;
      if (cls == PathClass::C) ++c_prev;
    }
    CHECK(Int(a) == count_nondec(n - 1));
    CHECK(Int(b) == count_nondec(n - 1));
    CHECK(c == b_prev + c_prev);

    // the inverse maps are injections into A_n/B_n/C_n
    for (const auto& q : enumerate_nondec(n - 1)) {
      CHECK(classify(map_A_inv(q)) == PathClass::A);
      CHECK(classify(map_B_inv(q)) == PathClass::B);
    }
  }
}
