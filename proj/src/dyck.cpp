#include "a22/dyck.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace a22::dyck {

std::string Step::name() const {
  return (horizontal ? "u" : "v") + std::to_string(index);
}

MaxDyckPath::MaxDyckPath(int a1, int a2) : a1_(a1), a2_(a2) {
  if (a1 < 1 || a2 < 0 || a2 > a1)
    throw std::invalid_argument("maximal Dyck path needs a1 >= 1, 0 <= a2 <= a1");
  hpos_.assign(a1 + 1, -1);
  vpos_.assign(a2 + 1, -1);
  verts_.push_back({0, 0});
  int y = 0, nextv = 1;
  for (int k = 1; k <= a1; ++k) {
    // height of u_k; the previous vertical run climbs to it
    const int h = static_cast<int>((static_cast<long long>(k - 1) * a2) / a1);
    while (y < h) {
      vpos_[nextv] = static_cast<int>(word_.size());
      word_.push_back({false, nextv});
      ++y;
      ++nextv;
      verts_.push_back({k - 1, y});
    }
    hpos_[k] = static_cast<int>(word_.size());
    word_.push_back({true, k});
    verts_.push_back({k, y});
  }
  while (y < a2) {
    vpos_[nextv] = static_cast<int>(word_.size());
    word_.push_back({false, nextv});
    ++y;
    ++nextv;
    verts_.push_back({a1, y});
  }
}

Point MaxDyckPath::vertex(int cyclic_pos) const {
  if (cyclic_pos < 0 || cyclic_pos >= length())
    throw std::out_of_range("vertex position out of range");
  return verts_[cyclic_pos];
}

int MaxDyckPath::position_of(Point p) const {
  if (p.x == a1_ && p.y == a2_) return 0;
  for (int i = 0; i < length(); ++i)
    if (verts_[i] == p) return i;
  throw std::invalid_argument("point not on the path");
}

int MaxDyckPath::horizontal_position(int k) const {
  if (k < 1 || k > a1_) throw std::out_of_range("horizontal index");
  return hpos_[k];
}

int MaxDyckPath::vertical_position(int j) const {
  if (j < 1 || j > a2_) throw std::out_of_range("vertical index");
  return vpos_[j];
}

MaxDyckPath build_maximal(int a1, int a2) { return MaxDyckPath(a1, a2); }

Subpath subpath(const MaxDyckPath& path, int pos_a, int pos_b) {
  const int len = path.length();
  if (pos_a < 0 || pos_a >= len || pos_b < 0 || pos_b >= len)
    throw std::out_of_range("subpath endpoint position");
  Subpath sub;
  sub.start = pos_a;
  const int count = pos_a == pos_b ? len : (pos_b - pos_a + len) % len;
  sub.edges.reserve(count);
  for (int i = 0; i < count; ++i) sub.edges.push_back((pos_a + i) % len);
  return sub;
}

std::vector<int> interior_positions(const MaxDyckPath& path,
                                    const Subpath& sub) {
  std::vector<int> out;
  const int len = path.length();
  for (std::size_t i = 1; i < sub.edges.size(); ++i)
    out.push_back((sub.start + static_cast<int>(i)) % len);
  return out;
}

std::vector<Point> interior_points(const MaxDyckPath& path,
                                   const Subpath& sub) {
  std::vector<Point> out;
  for (int pos : interior_positions(path, sub)) out.push_back(path.vertex(pos));
  return out;
}

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Index of vertex position pos_c along the subpath chain (0 = start,
// i = after i edges); first occurrence.
int chain_index(const MaxDyckPath& path, const Subpath& sub, int pos_c) {
  const int len = path.length();
  const int m = static_cast<int>(sub.edges.size());
  for (int i = 0; i <= m; ++i)
    if ((sub.start + i) % len == pos_c) return i;
  throw std::invalid_argument("point not on the subpath");
}

}  // namespace

int f_step(const MaxDyckPath& path, const Subpath& sub, int pos_c,
           const std::vector<int>& s1, int c) {
  const int upto = chain_index(path, sub, pos_c);
  int verticals = 0, hits = 0;
  for (int i = 0; i < upto; ++i) {
    const Step& s = path.step_at(sub.edges[i]);
    if (s.horizontal) {
      if (contains(s1, s.index)) ++hits;
    } else {
      ++verticals;
    }
  }
  return verticals - c * hits;
}

int g_step(const MaxDyckPath& path, const Subpath& sub, int pos_c,
           const std::vector<int>& s2, int b) {
  const int from = chain_index(path, sub, pos_c);
  int horizontals = 0, hits = 0;
  for (std::size_t i = from; i < sub.edges.size(); ++i) {
    const Step& s = path.step_at(sub.edges[i]);
    if (s.horizontal) {
      ++horizontals;
    } else if (contains(s2, s.index)) {
      ++hits;
    }
  }
  return horizontals - b * hits;
}

bool is_compatible_definition(const MaxDyckPath& path,
                              const std::vector<int>& s1,
                              const std::vector<int>& s2, int b, int c) {
  for (int u : s1) {
    const int pos_e = path.horizontal_position(u);  // left endpoint of u
    for (int v : s2) {
      const int pos_f =
          (path.vertical_position(v) + 1) % path.length();  // upper endpoint
      const Subpath ef = subpath(path, pos_e, pos_f);
      // prefix counts at each interior point; scan once in path order
      bool witness = false;
      const int m = static_cast<int>(ef.edges.size());
      int pre_vert = 0, pre_s1 = 0;
      int tot_horiz = 0, tot_s2 = 0;
      for (int e : ef.edges) {
        const Step& s = path.step_at(e);
        if (s.horizontal)
          ++tot_horiz;
        else if (contains(s2, s.index))
          ++tot_s2;
      }
      int suf_horiz = tot_horiz, suf_s2 = tot_s2;
      for (int i = 1; i < m && !witness; ++i) {
        const Step& prev = path.step_at(ef.edges[i - 1]);
        if (prev.horizontal) {
          if (contains(s1, prev.index)) ++pre_s1;
          --suf_horiz;
        } else {
          ++pre_vert;
          if (contains(s2, prev.index)) --suf_s2;
        }
        if (pre_vert == c * pre_s1 || suf_horiz == b * suf_s2) witness = true;
      }
      if (!witness) return false;
    }
  }
  return true;
}

MaxDyckPath family_path(int n) {
  if (n < 0) throw std::invalid_argument("family path needs n >= 0");
  return build_maximal(n + 1, n);
}

namespace {

std::vector<int> to_general_s1(const CompatiblePair& sel) {
  std::vector<int> out;
  out.reserve(sel.s1.size());
  for (int i : sel.s1) out.push_back(i + 1);
  return out;
}

}  // namespace

bool is_compatible_definition(const CompatiblePair& sel, int b, int c) {
  const MaxDyckPath path = family_path(sel.n);
  return is_compatible_definition(path, to_general_s1(sel), sel.s2, b, c);
}

bool is_compatible_max(const CompatiblePair& sel) {
  const MaxDyckPath path = family_path(sel.n);
  const std::vector<int> s1 = to_general_s1(sel);
  for (int i : sel.s1) {
    // A_i sits at cyclic position 2i-1 (A_0 at 0)
    const int pos_ai = i == 0 ? 0 : 2 * i - 1;
    for (int j : sel.s2) {
      const int pos_aj1 = (2 * j + 1) % path.length();  // A_{j+1}
      const Subpath ab = subpath(path, pos_ai, pos_aj1);
      int best = std::numeric_limits<int>::min();
      for (int pos_c : interior_positions(path, ab)) {
        best = std::max(best, f_step(path, ab, pos_c, s1, 2));
        best = std::max(best, g_step(path, ab, pos_c, sel.s2, 2));
      }
      if (best < 0) return false;
    }
  }
  return true;
}

bool is_compatible_fast(const CompatiblePair& sel) {
  for (int i : sel.s1)
    for (int j : sel.s2)
      if (j - i == 0 || j - i == 1) return false;
  return true;
}

std::vector<CompatiblePair> enumerate_compatible(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_compatible needs n >= 0");
  std::vector<CompatiblePair> out;
  CompatiblePair cur;
  cur.n = n;
  // letters O < U < V per position; V is barred at position 0 and after a U
  auto rec = [&](auto&& self, int i, bool prev_u) -> void {
    if (i == n + 1) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1, false);  // O
    cur.s1.push_back(i);       // U
    self(self, i + 1, true);
    cur.s1.pop_back();
    if (i >= 1 && !prev_u) {  // V
      cur.s2.push_back(i);
      self(self, i + 1, false);
      cur.s2.pop_back();
    }
  };
  rec(rec, 0, false);
  return out;
}

Int count_compatible(int n) {
  if (n < 0) throw std::invalid_argument("count_compatible needs n >= 0");
  // letter walk: totals by last letter; V is barred at position 0, after U
  Int o{1}, u{1}, v{0};
  for (int i = 1; i <= n; ++i) {
    Int all = o + u + v;
    Int v_next = o + v;
    o = all;
    u = all;
    v = v_next;
  }
  return o + u + v;
}

namespace {

LaurentPoly binomial_sum(Var v, int count, int stride) {
  // sum_m C(count, m) v^(stride*m); the vacuously-compatible degenerate strip
  LaurentPoly sum;
  Int binom = 1;
  for (int m = 0; m <= count; ++m) {
    ExpVec e;
    e[v] = stride * m;
    sum += LaurentPoly::monomial(e, binom);
    binom = binom * (count - m) / (m + 1);
  }
  return sum;
}

}  // namespace

LaurentPoly greedy_element(int a1, int a2, int b, int c) {
  if (b < 1 || c < 1) throw std::invalid_argument("greedy element needs b, c >= 1");
  ExpVec lead;
  lead[Var::x1] = -a1;
  lead[Var::x2] = -a2;
  const LaurentPoly front = LaurentPoly::monomial(lead);
  if (a1 <= 0 && a2 <= 0) return front;

  const int p1 = std::max(a1, 0), p2 = std::max(a2, 0);
  LaurentPoly sum;
  if (p2 == 0) {
    sum = binomial_sum(Var::x2, p1, c);
  } else if (p1 == 0) {
    sum = binomial_sum(Var::x1, p2, b);
  } else if (p2 > p1) {
    throw std::invalid_argument(
        "greedy element unsupported for 1 <= a1 < a2 (no maximal path shape)");
  } else if (b == 2 && c == 2 && p1 == p2 + 1) {
    for (const CompatiblePair& sel : enumerate_compatible(p2)) {
      ExpVec e;
      e[Var::x1] = 2 * static_cast<int>(sel.s2.size());
      e[Var::x2] = 2 * static_cast<int>(sel.s1.size());
      sum += LaurentPoly::monomial(e);
    }
  } else {
    if (p1 + p2 > 24)
      throw std::invalid_argument("greedy element rectangle too large");
    const MaxDyckPath path = build_maximal(p1, p2);
    for (unsigned m1 = 0; m1 < (1u << p1); ++m1) {
      std::vector<int> s1;
      for (int k = 1; k <= p1; ++k)
        if (m1 >> (k - 1) & 1) s1.push_back(k);
      for (unsigned m2 = 0; m2 < (1u << p2); ++m2) {
        std::vector<int> s2;
        for (int j = 1; j <= p2; ++j)
          if (m2 >> (j - 1) & 1) s2.push_back(j);
        if (!is_compatible_definition(path, s1, s2, b, c)) continue;
        ExpVec e;
        e[Var::x1] = b * static_cast<int>(s2.size());
        e[Var::x2] = c * static_cast<int>(s1.size());
        sum += LaurentPoly::monomial(e);
      }
    }
  }
  return front * sum;
}

std::pair<int, int> sigma1(int a1, int a2, int b, int c) {
  (void)b;
  return {a1, c * std::max(a1, 0) - a2};
}

std::pair<int, int> sigma2(int a1, int a2, int b, int c) {
  (void)c;
  return {b * std::max(a2, 0) - a1, a2};
}

}  // namespace a22::dyck
