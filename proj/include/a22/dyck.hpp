#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a22/laurent.hpp"

namespace a22::dyck {

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
};

// One edge of a maximal Dyck path: horizontal edges u_1..u_{a1} indexed left
// to right, vertical edges v_1..v_{a2} bottom to top (general 1-based
// convention; the (n+1) x n family re-indexes u_{k+1} as u_k, see
// CompatiblePair below).
struct Step {
  bool horizontal = true;
  int index = 1;
  bool operator==(const Step&) const = default;
  std::string name() const;  // "u3", "v1"
};

// The maximal Dyck path of the a1 x a2 rectangle: the highest lattice path
// from (0,0) to (a1,a2) staying weakly below the diagonal. Horizontal edge
// k (1-based) spans x in [k-1, k] at height floor((k-1)*a2/a1). The points
// (0,0) and (a1,a2) are identified; vertices are addressed by their cyclic
// position in [0, a1+a2).
class MaxDyckPath {
 public:
  MaxDyckPath(int a1, int a2);  // use build_maximal

  int a1() const { return a1_; }
  int a2() const { return a2_; }
  int length() const { return a1_ + a2_; }

  const std::vector<Step>& word() const { return word_; }
  const Step& step_at(int word_pos) const { return word_[word_pos]; }

  Point vertex(int cyclic_pos) const;  // position 0 reports (0,0)
  int position_of(Point p) const;      // throws if p is not on the path
  int horizontal_position(int k) const;  // word position of u_k (1-based)
  int vertical_position(int j) const;    // word position of v_j (1-based)

 private:
  int a1_, a2_;
  std::vector<Step> word_;
  std::vector<Point> verts_;  // verts_[p] for p = 0..a1+a2
  std::vector<int> hpos_, vpos_;
};

// Throws std::invalid_argument unless a1 >= 1 and 0 <= a2 <= a1.
MaxDyckPath build_maximal(int a1, int a2);

// The Northeast subpath from vertex position A to vertex position B, looping
// past (a1,a2) == (0,0) when needed; A == B yields the full loop.
struct Subpath {
  int start = 0;                // cyclic vertex position of A
  std::vector<int> edges;       // word positions in path order
};

Subpath subpath(const MaxDyckPath& path, int pos_a, int pos_b);

// Cyclic vertex positions strictly between the endpoints, in path order.
std::vector<int> interior_positions(const MaxDyckPath& path,
                                    const Subpath& sub);
// Same, as lattice points with (a1,a2) reported as (0,0).
std::vector<Point> interior_points(const MaxDyckPath& path,
                                   const Subpath& sub);

// Step functions along a subpath AB, at a vertex C on it (first occurrence):
//   f(C) = |(AC)_2| - c |(AC)_1 cap S1|
//   g(C) = |(CB)_1| - b |(CB)_2 cap S2|
// S1, S2 hold 1-based edge indices of the ambient path.
int f_step(const MaxDyckPath& path, const Subpath& sub, int pos_c,
           const std::vector<int>& s1, int c = 2);
int g_step(const MaxDyckPath& path, const Subpath& sub, int pos_c,
           const std::vector<int>& s2, int b = 2);

// Compatibility of (S1, S2) in the defining form: for every u in S1 and
// v in S2 there is an interior point A of EF (E = left endpoint of u,
// F = upper endpoint of v) with |(AF)_1| = b|(AF)_2 cap S2| or
// |(EA)_2| = c|(EA)_1 cap S1|. Indices are 1-based.
bool is_compatible_definition(const MaxDyckPath& path,
                              const std::vector<int>& s1,
                              const std::vector<int>& s2, int b, int c);

// A horizontal/vertical edge selection on the family path D^{(n+1) x n},
// stored in the 0-based convention: s1 holds u-indices in [0, n], s2 holds
// v-indices in [1, n]. (0-based u_i is the general 1-based u_{i+1}.)
struct CompatiblePair {
  int n = 0;
  std::vector<int> s1;
  std::vector<int> s2;
  bool operator==(const CompatiblePair&) const = default;
};

MaxDyckPath family_path(int n);  // D^{(n+1) x n}

bool is_compatible_definition(const CompatiblePair& sel, int b = 2, int c = 2);
// Max criterion on D^{(n+1) x n} (b = c = 2): every u_i in S1, v_j in S2
// admit max over interior C of {f(C), g(C)} >= 0 along A_i A_{j+1}.
bool is_compatible_max(const CompatiblePair& sel);
// Gap criterion: no u_i in S1, v_j in S2 with j - i in {0, 1}.
bool is_compatible_fast(const CompatiblePair& sel);

// All compatible pairs on D^{(n+1) x n} in deterministic order (depth-first
// over the letter encoding with O < U < V). The count is F_{2n+3}.
std::vector<CompatiblePair> enumerate_compatible(int n);

// Pair count by the letter-state walk, without materializing; F_{2n+3}.
Int count_compatible(int n);

// Greedy element x[a1, a2] in A(b, c):
//   x1^-a1 x2^-a2 sum over compatible pairs of x1^(b|S2|) x2^(c|S1|)
// on D^([a1]+ x [a2]+). For a1 <= 0 and a2 <= 0 this is the monomial
// x1^-a1 x2^-a2. Rectangles with 1 <= a1 < a2 are rejected.
LaurentPoly greedy_element(int a1, int a2, int b, int c);

// Index transforms of the greedy basis automorphisms:
//   sigma1: (a1, a2) -> (a1, c[a1]+ - a2)
//   sigma2: (a1, a2) -> (b[a2]+ - a1, a2)
std::pair<int, int> sigma1(int a1, int a2, int b = 2, int c = 2);
std::pair<int, int> sigma2(int a1, int a2, int b = 2, int c = 2);

}  // namespace a22::dyck
