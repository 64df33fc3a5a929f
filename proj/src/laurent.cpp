#include "a22/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace a22 {

int ExpVec::total_degree() const {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

bool ExpVec::storable() const {
  return e[2] >= 0 && e[3] >= 0 && e[4] >= 0 && e[5] >= 0;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

bool GrlexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(ExpVec{}, Int(c));
}

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_.emplace(ExpVec{}, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const ExpVec& exp, Int coef) {
  if (!exp.storable())
    throw std::invalid_argument(
        "monomial: negative exponent on x3, x4, y1 or y2");
  LaurentPoly p;
  if (coef != 0) p.terms_.emplace(exp, std::move(coef));
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
  ExpVec exp;
  exp[v] = power;
  return monomial(exp);
}

void LaurentPoly::add_term(const ExpVec& exp, const Int& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [exp, coef] : terms_) r.terms_.emplace(exp, -coef);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [exp, coef] : o.terms_) add_term(exp, coef);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [exp, coef] : o.terms_) add_term(exp, -coef);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::specialize_ones(const std::vector<Var>& vars) const {
  std::array<bool, kNumVars> drop{};
  for (Var v : vars) drop[static_cast<int>(v)] = true;
  LaurentPoly r;
  for (const auto& [exp, coef] : terms_) {
    ExpVec cut = exp;
    for (int i = 0; i < kNumVars; ++i)
      if (drop[i]) cut.e[i] = 0;
    r.add_term(cut, coef);
  }
  return r;
}

Int LaurentPoly::coefficient_sum() const {
  Int s = 0;
  for (const auto& [exp, coef] : terms_) s += coef;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    Int c = coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < kNumVars; ++i) {
      if (exp.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (exp.e[i] != 1) vars += "^" + std::to_string(exp.e[i]);
    }
    if (vars.empty()) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << vars;
    }
  }
  return os.str();
}

namespace {

// Componentwise minimum exponent over the support.
ExpVec min_exponents(const LaurentPoly& p) {
  ExpVec m = p.terms().begin()->first;
  for (const auto& [exp, coef] : p.terms())
    for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], exp.e[i]);
  return m;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw NonExactDivision("divisor is zero");
  if (p.is_zero()) return {};

  // Shift both operands to true polynomials (all exponents >= 0) so that
  // leading-term elimination under graded-lex is well-founded.
  const ExpVec pshift = min_exponents(p);
  const ExpVec qshift = min_exponents(q);
  using Map = std::map<ExpVec, Int, GrlexDesc>;
  Map rem, div;
  for (const auto& [exp, coef] : p.terms()) rem.emplace(exp - pshift, coef);
  for (const auto& [exp, coef] : q.terms()) div.emplace(exp - qshift, coef);

  const ExpVec dlead = div.begin()->first;
  const Int dcoef = div.begin()->second;

  Map quot;
  while (!rem.empty()) {
    const ExpVec rlead = rem.begin()->first;
    const Int rcoef = rem.begin()->second;
    const ExpVec texp = rlead - dlead;
    for (int v : texp.e)
      if (v < 0) throw NonExactDivision("leading term not divisible");
    if (rcoef % dcoef != 0)
      throw NonExactDivision("leading coefficient not divisible");
    const Int tcoef = rcoef / dcoef;
    quot.emplace(texp, tcoef);
    for (const auto& [exp, coef] : div) {
      const ExpVec key = texp + exp;
      auto [it, inserted] = rem.emplace(key, -tcoef * coef);
      if (!inserted) {
        it->second -= tcoef * coef;
        if (it->second == 0) rem.erase(it);
      } else if (it->second == 0) {
        rem.erase(it);
      }
    }
  }

  const ExpVec unshift = pshift - qshift;
  LaurentPoly result;
  for (const auto& [exp, coef] : quot) {
    const ExpVec full = exp + unshift;
    if (!full.storable())
      throw NonExactDivision("quotient leaves the mixed Laurent ring");
    result.add_term(full, coef);
  }
  if (!(result * q == p)) throw NonExactDivision("verification failed");
  return result;
}

Int fib(int k) {
  if (k <= 0) return 0;
  Int a = 0, b = 1;  // F_0, F_1
  for (int i = 1; i < k; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace a22
