#include "a22/seed.hpp"

#include <algorithm>
#include <stdexcept>

namespace a22::seed {

TropMonomial TropMonomial::times(const TropMonomial& o) const {
  return {{e[0] + o.e[0], e[1] + o.e[1]}};
}

TropMonomial TropMonomial::power(int k) const {
  return {{e[0] * k, e[1] * k}};
}

TropMonomial TropMonomial::inverse() const { return {{-e[0], -e[1]}}; }

TropMonomial TropMonomial::oplus(const TropMonomial& o) const {
  return {{std::min(e[0], o.e[0]), std::min(e[1], o.e[1])}};
}

TropMonomial TropMonomial::oplus_one() const { return oplus(TropMonomial{}); }

LaurentPoly TropMonomial::positive_part() const {
  ExpVec v;
  v[Var::y1] = std::max(e[0], 0);
  v[Var::y2] = std::max(e[1], 0);
  return LaurentPoly::monomial(v);
}

LaurentPoly TropMonomial::negative_part() const {
  ExpVec v;
  v[Var::y1] = std::max(-e[0], 0);
  v[Var::y2] = std::max(-e[1], 0);
  return LaurentPoly::monomial(v);
}

Seed initial_seed() {
  Seed s;
  s.cluster = {LaurentPoly::variable(Var::x1), LaurentPoly::variable(Var::x2)};
  s.coeff = {TropMonomial{{1, 0}}, TropMonomial{{0, 1}}};
  s.b = {{{0, 2}, {-2, 0}}};
  return s;
}

Seed mutate(const Seed& s, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("mutation direction must be 1 or 2");
  const int kk = k - 1;
  if (s.b[0][0] != 0 || s.b[1][1] != 0)
    throw std::invalid_argument("exchange matrix must have zero diagonal");

  // Exchange relation, with the tropical (y_k + 1) folded into the two
  // numerator terms so every intermediate stays in the storable ring:
  //   x_k' = (y_k/(y_k+1)) M+ / x_k + (1/(y_k+1)) M- / x_k
  LaurentPoly mplus{1}, mminus{1};
  for (int i = 0; i < 2; ++i) {
    const int bik = s.b[i][kk];
    if (bik > 0) {
      LaurentPoly f = s.cluster[i];
      for (int t = 1; t < bik; ++t) f *= s.cluster[i];
      mplus *= f;
    } else if (bik < 0) {
      LaurentPoly f = s.cluster[i];
      for (int t = 1; t < -bik; ++t) f *= s.cluster[i];
      mminus *= f;
    }
  }
  const LaurentPoly numerator = s.coeff[kk].positive_part() * mplus +
                                s.coeff[kk].negative_part() * mminus;

  Seed out = s;
  out.cluster[kk] = divide_exact(numerator, s.cluster[kk]);

  const TropMonomial yk = s.coeff[kk];
  const TropMonomial yk_hat = yk.oplus_one();
  for (int j = 0; j < 2; ++j) {
    if (j == kk) {
      out.coeff[j] = yk.inverse();
    } else {
      const int bkj = s.b[kk][j];
      out.coeff[j] = s.coeff[j]
                         .times(yk.power(std::max(bkj, 0)))
                         .times(yk_hat.power(-bkj));
    }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (i == kk || j == kk) out.b[i][j] = -s.b[i][j];
  return out;
}

LaurentPoly coefficient_free_variable(int m) {
  if (m < 1) throw std::invalid_argument("cluster variable index needs m >= 1");
  LaurentPoly prev = LaurentPoly::variable(Var::x1);
  LaurentPoly cur = LaurentPoly::variable(Var::x2);
  if (m == 1) return prev;
  for (int i = 2; i < m; ++i) {
    LaurentPoly next = divide_exact(cur * cur + LaurentPoly{1}, prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

LaurentPoly principal_variable(int k) {
  if (k < 3) throw std::invalid_argument("principal variable needs k >= 3");
  Seed s = initial_seed();
  int dir = 1;
  for (int step = 0; step < k - 2; ++step) {
    s = mutate(s, dir);
    dir = 3 - dir;
  }
  const int last = (k - 2) % 2 == 1 ? 0 : 1;  // mu_1 first, alternating
  return s.cluster[last];
}

}  // namespace a22::seed
