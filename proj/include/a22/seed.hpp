#pragma once

#include <array>

#include "a22/laurent.hpp"

namespace a22::seed {

// A monomial in the tropical semifield Trop(y1, y2): multiplication adds
// exponents, semifield addition takes componentwise minimum. Exponents may
// be negative.
struct TropMonomial {
  std::array<int, 2> e{};

  bool operator==(const TropMonomial&) const = default;

  TropMonomial times(const TropMonomial& o) const;
  TropMonomial power(int k) const;
  TropMonomial inverse() const;
  TropMonomial oplus(const TropMonomial& o) const;  // componentwise min
  TropMonomial oplus_one() const;                   // min with 0

  // The positive/negative split y = (y oplus 1)^-1 * y-part used by the
  // exchange relation; both have nonnegative exponents.
  LaurentPoly positive_part() const;  // exponents [e]+
  LaurentPoly negative_part() const;  // exponents [-e]+
};

// A rank-2 seed: cluster pair, coefficient pair, 2x2 skew-symmetric exchange
// matrix with zero diagonal.
struct Seed {
  std::array<LaurentPoly, 2> cluster;
  std::array<TropMonomial, 2> coeff;
  std::array<std::array<int, 2>, 2> b{};

  bool operator==(const Seed&) const = default;
};

// The seed ((x1, x2), (y1, y2), [[0,2],[-2,0]]) of the annulus triangulation.
Seed initial_seed();

// Mutation in direction k (1 or 2):
//   x_k' = (y_k prod x_i^[b_ik]+ + prod x_i^[-b_ik]+) / ((y_k + 1) x_k)
//   y_k' = y_k^-1,  y_j' = y_j y_k^[b_kj]+ (y_k + 1)^-b_kj
//   b_ij' = -b_ij when i = k or j = k (all off-diagonal entries at rank 2)
// Division is exact; NonExactDivision propagating means a broken seed.
Seed mutate(const Seed& s, int k);

// x_m of the coefficient-free exchange recurrence x_{n-1} x_{n+1} = x_n^2 + 1
// with generators x_1, x_2. Requires m >= 1.
LaurentPoly coefficient_free_variable(int m);

// The cluster variable x_k with principal coefficients, reached from the
// initial seed by alternating mutations mu_1, mu_2, mu_1, ... (k-2 steps);
// the slot mutated last holds x_k. Requires k >= 3.
LaurentPoly principal_variable(int k);

}  // namespace a22::seed
