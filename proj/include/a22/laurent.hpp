#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace a22 {

using Int = boost::multiprecision::cpp_int;

// Variable order fixed project-wide: (x1, x2, x3, x4, y1, y2).
// x1, x2 are the initial cluster variables (Laurent, exponents of any sign),
// x3, x4 the boundary-arc weights and y1, y2 the principal coefficients
// (exponents nonnegative in every stored term).
enum class Var : int { x1 = 0, x2 = 1, x3 = 2, x4 = 3, y1 = 4, y2 = 5 };

inline constexpr int kNumVars = 6;
inline constexpr const char* kVarNames[kNumVars] = {"x1", "x2", "x3",
                                                    "x4", "y1", "y2"};

// Exponent vector of one Laurent monomial.
struct ExpVec {
  std::array<int, kNumVars> e{};

  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  int& operator[](Var v) { return e[static_cast<int>(v)]; }

  int total_degree() const;
  // x3, x4, y1, y2 exponents must be >= 0 for a storable term.
  bool storable() const;

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-(const ExpVec& o) const;
  bool operator==(const ExpVec& o) const = default;
};

// Descending graded-lexicographic order: higher total degree first, ties
// broken lexicographically on (x1,...,y2). Term maps iterate leading term
// first, which fixes the canonical serialization order.
struct GrlexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class NonExactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer-coefficient Laurent polynomial in (x1, x2, x3, x4, y1, y2).
// Canonical form: no zero coefficients; equal polynomials have identical
// term maps. Immutable in spirit: all operations return new values.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Int, GrlexDesc>;

  LaurentPoly() = default;
  LaurentPoly(long long c);
  explicit LaurentPoly(Int c);

  // Throws std::invalid_argument if exp is not storable.
  static LaurentPoly monomial(const ExpVec& exp, Int coef = 1);
  static LaurentPoly variable(Var v, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // Substitutes 1 for each named variable.
  LaurentPoly specialize_ones(const std::vector<Var>& vars) const;
  // Substitutes 1 for all six variables; the result is the coefficient sum.
  Int coefficient_sum() const;

  // Human-readable form, e.g. "x1^-1*x3*x4*y1 + x1^-1*x2^2".
  std::string str() const;

  // Internal accumulation; drops cancelled terms.
  void add_term(const ExpVec& exp, const Int& coef);

 private:
  TermMap terms_;
};

// Returns r with r*q == p (verified by multiplication before returning).
// Throws NonExactDivision if q does not divide p in the mixed Laurent ring
// Z[x1^,x2^,x3,x4,y1,y2] (^ marks invertible variables).
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Fibonacci numbers with F_1 = F_2 = 1; fib(0) = 0.
Int fib(int k);

}  // namespace a22
