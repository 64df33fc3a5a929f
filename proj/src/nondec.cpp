#include "a22/nondec.hpp"

#include <numeric>
#include <stdexcept>

namespace a22::nondec {

int NonDecPath::half_length() const {
  int n = 0;
  for (const Mountain& m : mountains) n += m.d;
  return n;
}

std::vector<int> NonDecPath::valley_altitudes() const {
  std::vector<int> out;
  int alt = 0;
  for (std::size_t i = 0; i + 1 < mountains.size(); ++i) {
    alt += mountains[i].d - mountains[i].e;
    out.push_back(alt);
  }
  return out;
}

void validate(const NonDecPath& p) {
  if (p.mountains.empty())
    throw std::invalid_argument("path needs at least one mountain");
  int ups = 0, downs = 0;
  for (std::size_t i = 0; i < p.mountains.size(); ++i) {
    const Mountain& m = p.mountains[i];
    if (m.d < 1 || m.e < 1)
      throw std::invalid_argument("mountain magnitudes must be positive");
    if (i + 1 < p.mountains.size() && m.d < m.e)
      throw std::invalid_argument("decreasing valley pair");
    ups += m.d;
    downs += m.e;
  }
  if (ups != downs)
    throw std::invalid_argument("path does not return to the axis");
}

NonDecPath from_steps(const std::string& word) {
  if (word.empty() || word.size() % 2 != 0)
    throw std::invalid_argument("step word must have positive even length");
  NonDecPath p;
  int alt = 0;
  bool in_down = false;
  for (char ch : word) {
    if (ch == '/') {
      if (p.mountains.empty() || in_down) {
        p.mountains.push_back({0, 0});
        in_down = false;
      }
      ++p.mountains.back().d;
      ++alt;
    } else if (ch == '\\') {
      if (p.mountains.empty())
        throw std::invalid_argument("path dips below the axis");
      in_down = true;
      ++p.mountains.back().e;
      --alt;
      if (alt < 0) throw std::invalid_argument("path dips below the axis");
    } else {
      throw std::invalid_argument(std::string("bad step character: ") + ch);
    }
  }
  if (alt != 0)
    throw std::invalid_argument("path does not return to the axis");
  validate(p);  // rejects decreasing valleys
  return p;
}

std::string to_steps(const NonDecPath& p) {
  validate(p);
  std::string out;
  for (const Mountain& m : p.mountains) {
    out.append(m.d, '/');
    out.append(m.e, '\\');
  }
  return out;
}

std::vector<NonDecPath> enumerate_nondec(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_nondec needs n >= 1");
  std::vector<NonDecPath> out;
  NonDecPath cur;
  // rd/re = remaining up/down steps; the last mountain must absorb them all
  auto rec = [&](auto&& self, int rd, int re) -> void {
    cur.mountains.push_back({rd, re});
    out.push_back(cur);
    cur.mountains.pop_back();
    for (int d = 1; d < rd; ++d) {
      for (int e = 1; e <= d && re - e >= 1; ++e) {
        cur.mountains.push_back({d, e});
        self(self, rd - d, re - e);
        cur.mountains.pop_back();
      }
    }
  };
  rec(rec, n, n);
  return out;
}

Int count_nondec(int n) {
  if (n < 1) throw std::invalid_argument("count_nondec needs n >= 1");
  if (n == 1) return 1;  // the single path [(1,1)]
  // |S_2| splits as A = {[(2,2)]}, B = {[(1,1),(1,1)]}, C empty
  Int a{1}, b{1}, c{0}, s{2};
  for (int m = 3; m <= n; ++m) {
    Int c_next = b + c;
    a = s;
    b = s;
    c = c_next;
    s = a + b + c;
  }
  return s;
}

std::string to_string(PathClass c) {
  switch (c) {
    case PathClass::A:
      return "A";
    case PathClass::B:
      return "B";
    case PathClass::C:
      return "C";
  }
  return "?";
}

PathClass classify(const NonDecPath& p) {
  validate(p);
  const std::size_t k = p.mountains.size();
  if (p.mountains[k - 1].d >= 2) return PathClass::A;
  if (k < 2)
    throw Unclassifiable(
        "single-mountain path with d = 1 fits no class clause");
  const Mountain& prev = p.mountains[k - 2];
  return prev.d == prev.e ? PathClass::B : PathClass::C;
}

NonDecPath map_A(const NonDecPath& p) {
  if (classify(p) != PathClass::A)
    throw std::invalid_argument("map_A input must lie in class A");
  NonDecPath q = p;
  --q.mountains.back().d;  // d >= 2 and d <= e, so both stay positive
  --q.mountains.back().e;
  validate(q);
  return q;
}

NonDecPath map_A_inv(const NonDecPath& p) {
  validate(p);
  NonDecPath q = p;
  ++q.mountains.back().d;
  ++q.mountains.back().e;
  return q;
}

NonDecPath map_B(const NonDecPath& p) {
  if (classify(p) != PathClass::B)
    throw std::invalid_argument("map_B input must lie in class B");
  NonDecPath q = p;
  const int ek = q.mountains.back().e;
  q.mountains.pop_back();
  q.mountains.back().e = q.mountains.back().d + ek - 1;
  validate(q);
  return q;
}

NonDecPath map_B_inv(const NonDecPath& p) {
  validate(p);
  NonDecPath q = p;
  const Mountain last = q.mountains.back();
  q.mountains.back().e = last.d;
  q.mountains.push_back({1, last.e - last.d + 1});
  validate(q);
  return q;
}

NonDecPath map_C(const NonDecPath& p) {
  if (classify(p) != PathClass::C)
    throw std::invalid_argument("map_C input must lie in class C");
  NonDecPath q = p;
  --q.mountains[q.mountains.size() - 2].d;
  --q.mountains.back().e;
  validate(q);
  return q;
}

NonDecPath map_C_inv(const NonDecPath& p) {
  const PathClass cls = classify(p);
  if (cls == PathClass::A)
    throw std::invalid_argument("map_C_inv input must lie in class B or C");
  NonDecPath q = p;
  ++q.mountains[q.mountains.size() - 2].d;
  ++q.mountains.back().e;
  validate(q);
  return q;
}

}  // namespace a22::nondec
