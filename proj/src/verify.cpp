#include "a22/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "a22/bijection.hpp"
#include "a22/dyck.hpp"
#include "a22/nondec.hpp"
#include "a22/seed.hpp"
#include "a22/snake.hpp"

namespace a22::verify {

namespace {

Check pass(const std::string& name, const std::string& detail) {
  return {name, true, detail};
}

Check fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

std::string range(int lo, int hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

std::vector<Check> counts_suite(int max_n) {
  std::vector<Check> out;
  {
    const int hi = 2 * max_n + 6;
    Check c = pass("matching counts", "F_{n+2} for n=" + range(1, hi));
    for (int n = 1; n <= hi && c.ok; ++n) {
      const Int dp = snake::count_matchings(n);
      if (dp != fib(n + 2))
        c = fail("matching counts",
                 "count(" + std::to_string(n) + ") != F_" + std::to_string(n + 2));
      else if (n <= max_n + 5 &&
               Int(snake::enumerate_matchings(snake::build(n)).size()) != dp)
        c = fail("matching counts",
                 "enumeration disagrees with count at n=" + std::to_string(n));
    }
    out.push_back(c);
  }
  {
    const int hi = max_n + 3;
    Check c = pass("compatible pair counts",
                   "F_{2n+3} and 3|T_{n-1}|-|T_{n-2}| for n=" + range(0, hi));
    for (int n = 0; n <= hi && c.ok; ++n) {
      const Int cnt = dyck::count_compatible(n);
      if (cnt != fib(2 * n + 3))
        c = fail("compatible pair counts",
                 "count(" + std::to_string(n) + ") != F_" +
                     std::to_string(2 * n + 3));
      else if (n >= 2 && cnt != 3 * dyck::count_compatible(n - 1) -
                                    dyck::count_compatible(n - 2))
        c = fail("compatible pair counts",
                 "recurrence breaks at n=" + std::to_string(n));
      else if (n <= max_n &&
               Int(dyck::enumerate_compatible(n).size()) != cnt)
        c = fail("compatible pair counts",
                 "enumeration disagrees with count at n=" + std::to_string(n));
    }
    out.push_back(c);
  }
  {
    const int hi = max_n + 5;
    Check c = pass("nondecreasing path counts",
                   "F_{2n-1} and 3|S_n|-|S_{n-1}| for n=" + range(2, hi));
    for (int n = 2; n <= hi && c.ok; ++n) {
      const Int cnt = nondec::count_nondec(n);
      if (cnt != fib(2 * n - 1))
        c = fail("nondecreasing path counts",
                 "count(" + std::to_string(n) + ") != F_" +
                     std::to_string(2 * n - 1));
      else if (n >= 3 && cnt != 3 * nondec::count_nondec(n - 1) -
                                    nondec::count_nondec(n - 2))
        c = fail("nondecreasing path counts",
                 "recurrence breaks at n=" + std::to_string(n));
      else if (n <= max_n + 2 &&
               Int(nondec::enumerate_nondec(n).size()) != cnt)
        c = fail("nondecreasing path counts",
                 "enumeration disagrees with count at n=" + std::to_string(n));
    }
    out.push_back(c);
  }
  {
    const int hi = max_n + 1;
    Check c = pass("class partition sizes",
                   "|A_n|=|B_n|=|S_{n-1}|, |C_n|=|B_{n-1}|+|C_{n-1}| for n=" +
                       range(3, hi));
    for (int n = 3; n <= hi && c.ok; ++n) {
      long long a = 0, b = 0, cc = 0;
      for (const auto& p : nondec::enumerate_nondec(n)) {
        switch (nondec::classify(p)) {
          case nondec::PathClass::A: ++a; break;
          case nondec::PathClass::B: ++b; break;
          case nondec::PathClass::C: ++cc; break;
        }
      }
      long long b_prev = 0, c_prev = 0;
      for (const auto& p : nondec::enumerate_nondec(n - 1)) {
        const auto cls = nondec::classify(p);
        if (cls == nondec::PathClass::B) ++b_prev;
        if (cls == nondec::PathClass::C) ++c_prev;
      }
      const Int s_prev = nondec::count_nondec(n - 1);
      if (Int(a) != s_prev || Int(b) != s_prev || cc != b_prev + c_prev)
        c = fail("class partition sizes", "mismatch at n=" + std::to_string(n));
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Check> oracles_suite(int max_n) {
  std::vector<Check> out;
  {
    const int hi = 2 * max_n;
    Check c = pass("z direct = z recurrence", "n=" + range(1, hi));
    for (int n = 1; n <= hi && c.ok; ++n)
      if (!(snake::z_direct(n) == snake::z_recur(n)))
        c = fail("z direct = z recurrence", "mismatch at n=" + std::to_string(n));
    out.push_back(c);
  }
  {
    const int hi = max_n + 1;
    Check c = pass("snake = mutation expansion", "k=" + range(3, hi));
    for (int k = 3; k <= hi && c.ok; ++k)
      if (!(snake::cluster_variable_via_snake(k) == seed::principal_variable(k)))
        c = fail("snake = mutation expansion", "mismatch at k=" + std::to_string(k));
    out.push_back(c);
  }
  {
    const int hi = max_n + 2;
    Check c = pass("coefficient-free triple agreement", "k=" + range(2, hi));
    for (int k = 2; k <= hi && c.ok; ++k) {
      const LaurentPoly free_rec = seed::coefficient_free_variable(k);
      const LaurentPoly greedy = dyck::greedy_element(k - 2, k - 3, 2, 2);
      if (!(free_rec == greedy))
        c = fail("coefficient-free triple agreement",
                 "greedy mismatch at k=" + std::to_string(k));
      else if (k >= 3 &&
               !(snake::cluster_variable_via_snake(k).specialize_ones(
                     {Var::y1, Var::y2}) == free_rec))
        c = fail("coefficient-free triple agreement",
                 "snake specialization mismatch at k=" + std::to_string(k));
    }
    out.push_back(c);
  }
  {
    const int hi = max_n + 3;
    Check c = pass("coefficient sums", "F_{2k-3} for k=" + range(3, hi));
    for (int k = 3; k <= hi && c.ok; ++k)
      if (snake::cluster_variable_via_snake(k).coefficient_sum() !=
          fib(2 * k - 3))
        c = fail("coefficient sums", "mismatch at k=" + std::to_string(k));
    out.push_back(c);
  }
  {
    Check c = pass("mutation involution", "mu_k mu_k = id from the initial seed");
    const seed::Seed s0 = seed::initial_seed();
    for (int k = 1; k <= 2 && c.ok; ++k)
      if (!(seed::mutate(seed::mutate(s0, k), k) == s0))
        c = fail("mutation involution", "broken for k=" + std::to_string(k));
    out.push_back(c);
  }
  return out;
}

std::vector<Check> bijections_suite(int max_n) {
  std::vector<Check> out;
  Check phi_c = pass("phi bijection", "round trips and counts, n=" + range(0, max_n));
  Check theta_c = pass("theta bijection", "round trips and counts, n=" + range(0, max_n));
  Check psi_c = pass("psi = theta after phi", "pointwise, n=" + range(0, max_n));
  Check letters_c = pass("letter-word image", "no-UV words, n=" + range(0, max_n));
  for (int n = 0; n <= max_n; ++n) {
    const snake::SnakeGraph g = snake::build(2 * n + 1);
    const auto matchings = snake::enumerate_matchings(g);
    const auto pairs = dyck::enumerate_compatible(n);
    const auto paths = nondec::enumerate_nondec(n + 2);

    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    for (const auto& p : matchings) {
      const dyck::CompatiblePair sel = bij::phi(p);
      if (!dyck::is_compatible_fast(sel)) {
        phi_c = fail("phi bijection", "image not compatible at n=" + std::to_string(n));
        break;
      }
      if (!(bij::phi_inv(sel) == p)) {
        phi_c = fail("phi bijection", "phi_inv(phi(P)) != P at n=" + std::to_string(n));
        break;
      }
      images.insert({sel.s1, sel.s2});
      if (!(bij::psi(p) == bij::theta(sel)))
        psi_c = fail("psi = theta after phi", "mismatch at n=" + std::to_string(n));
    }
    if (phi_c.ok && images.size() != pairs.size())
      phi_c = fail("phi bijection", "image size != F_{2n+3} at n=" + std::to_string(n));
    if (phi_c.ok)
      for (const auto& sel : pairs)
        if (!(bij::phi(bij::phi_inv(sel)) == sel)) {
          phi_c = fail("phi bijection",
                       "phi(phi_inv(S)) != S at n=" + std::to_string(n));
          break;
        }

    std::set<std::vector<std::pair<int, int>>> path_images;
    for (const auto& sel : pairs) {
      const nondec::NonDecPath img = bij::theta(sel);
      if (img.half_length() != n + 2) {
        theta_c = fail("theta bijection", "wrong length at n=" + std::to_string(n));
        break;
      }
      if (!(bij::theta_inv(img) == sel)) {
        theta_c = fail("theta bijection",
                       "theta_inv(theta(S)) != S at n=" + std::to_string(n));
        break;
      }
      std::vector<std::pair<int, int>> key;
      for (const auto& m : img.mountains) key.emplace_back(m.d, m.e);
      path_images.insert(key);
      const std::string word = bij::pair_to_letters(sel);
      if (!bij::letters_valid(word) || !(bij::letters_to_pair(word) == sel))
        letters_c = fail("letter-word image",
                         "letter round trip broken at n=" + std::to_string(n));
    }
    if (theta_c.ok && path_images.size() != paths.size())
      theta_c = fail("theta bijection",
                     "image size != F_{2n+3} at n=" + std::to_string(n));
    if (theta_c.ok)
      for (const auto& p : paths)
        if (!(bij::theta(bij::theta_inv(p)) == p)) {
          theta_c = fail("theta bijection",
                         "theta(theta_inv(w)) != w at n=" + std::to_string(n));
          break;
        }
  }
  out.push_back(phi_c);
  out.push_back(theta_c);
  out.push_back(psi_c);
  out.push_back(letters_c);
  return out;
}

std::vector<Check> all_suites(int max_n) {
  std::vector<Check> out = counts_suite(max_n);
  for (auto& c : oracles_suite(max_n)) out.push_back(std::move(c));
  for (auto& c : bijections_suite(max_n)) out.push_back(std::move(c));
  return out;
}

}  // namespace a22::verify
