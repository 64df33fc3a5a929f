#pragma once

#include <compare>
#include <string>
#include <vector>

#include "a22/laurent.hpp"

namespace a22::snake {

// One edge of the ladder graph H_n. Vertices are A_0..A_n on one rail and
// B_0..B_n on the other; rung(i) = A_iB_i, sideA(i) = A_iA_{i+1},
// sideB(i) = B_iB_{i+1}.
struct Edge {
  enum Kind : int { kRung = 0, kSideA = 1, kSideB = 2 };

  Kind kind = kRung;
  int pos = 0;

  auto operator<=>(const Edge&) const = default;

  std::string name() const;               // "rung:3", "sideA:0", ...
  static Edge parse(const std::string&);  // throws std::invalid_argument
};

// The graph H_n: n tiles, vertices A_0..A_n, B_0..B_n, 3n+1 edges.
// Edge weights: rung(i) carries x3 (i even) or x4 (i odd); sideA(i) and
// sideB(i) carry x2 (i even) or x1 (i odd). Tile t (1-indexed, spanning
// rungs t-1 and t) carries y1 (t odd) or y2 (t even).
struct SnakeGraph {
  int tiles = 0;

  int vertex_count() const { return 2 * (tiles + 1); }
  int edge_count() const { return 3 * tiles + 1; }
  LaurentPoly edge_weight(const Edge& e) const;
  LaurentPoly tile_coefficient(int t) const;
  std::vector<Edge> all_edges() const;
};

// Throws std::invalid_argument unless n >= 1.
SnakeGraph build(int n);

// An edge subset covering every vertex of H_n exactly once. Edges are kept
// sorted in canonical order (by position, then rung < sideA < sideB).
struct PerfectMatching {
  int n = 0;
  std::vector<Edge> edges;

  bool operator==(const PerfectMatching&) const = default;
};

// Exhaustive validity check (every vertex in exactly one edge).
bool is_perfect_matching(const SnakeGraph& g, const PerfectMatching& p);

// All perfect matchings in a deterministic order, walking columns left to
// right and choosing "rung at column c" before "side pair at columns c,c+1".
// The count is F_{n+2}.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);

// Matching count by the same column walk, without materializing; F_{n+2}.
Int count_matchings(int n);

// The boundary matching containing the western side edges:
// {sideA(2i), sideB(2i)} plus rung(n) when n is even.
PerfectMatching p_minus(const SnakeGraph& g);

// The boundary matching containing rung(0): {rung(0)} then
// {sideA(2i+1), sideB(2i+1)} plus rung(n) when n is odd.
PerfectMatching p_plus(const SnakeGraph& g);

// Edge set of P_- symmetric difference P, in canonical order.
std::vector<Edge> symmetric_difference(const SnakeGraph& g,
                                       const PerfectMatching& p);

// Tile indices enclosed by P_- symmetric difference P. The difference is a
// disjoint union of cycles, each bounding a run of consecutive tiles; tile t
// lies inside exactly when sideA(t-1) belongs to the difference.
std::vector<int> symmetric_difference_tiles(const SnakeGraph& g,
                                            const PerfectMatching& p);

// Product of the edge weights of p.
LaurentPoly weight(const SnakeGraph& g, const PerfectMatching& p);

// Product of tile coefficients over symmetric_difference_tiles.
LaurentPoly y_monomial(const SnakeGraph& g, const PerfectMatching& p);

// z_n = sum over matchings of w(P) y(P), divided by x1^ceil(n/2) x2^floor(n/2),
// computed by direct enumeration.
LaurentPoly z_direct(int n);

// Same polynomial via the two-step recurrence
//   z_{2k+1} = (x1^-1 x4 y1) z_{2k} + (x1^-1 x2) z_{2k-1}
//   z_{2k+2} = (x2^-1 x3) z_{2k+1} + (x1 x2^-1 y1 y2) z_{2k}
// with bases z_1, z_2 from z_direct.
LaurentPoly z_recur(int n);

// The cluster variable attached to the k-th arc: z_{2k-5} with the boundary
// weights x3, x4 set to 1. Requires k >= 3.
LaurentPoly cluster_variable_via_snake(int k);

}  // namespace a22::snake
