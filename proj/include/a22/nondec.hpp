#pragma once

#include <string>
#include <vector>

#include "a22/laurent.hpp"

namespace a22::nondec {

// One mountain of a nondecreasing Dyck path: d up-steps followed by e
// down-steps, both >= 1.
struct Mountain {
  int d = 1;
  int e = 1;
  bool operator==(const Mountain&) const = default;
};

// A nondecreasing Dyck path of length 2n stored as its mountain magnitudes.
// Valid lists satisfy d_i >= e_i >= 1 for every non-last mountain,
// 1 <= d_last <= e_last, and sum d_i = sum e_i = n; equivalently the step
// path stays in the first quadrant with nondecreasing valley altitudes.
struct NonDecPath {
  std::vector<Mountain> mountains;

  bool operator==(const NonDecPath&) const = default;
  int half_length() const;
  std::vector<int> valley_altitudes() const;  // after each non-last mountain
};

// Throws std::invalid_argument describing the violated constraint.
void validate(const NonDecPath& p);

// Step-word view: one character per step, '/' up and '\' down. from_steps
// rejects words that dip below the axis, end at nonzero altitude, have odd
// length, or carry a decreasing valley pair.
NonDecPath from_steps(const std::string& word);
std::string to_steps(const NonDecPath& p);

// All nondecreasing Dyck paths of length 2n in deterministic order (at each
// valley the closing mountain is emitted first, then continuations by
// increasing (d, e)). The count is F_{2n-1}.
std::vector<NonDecPath> enumerate_nondec(int n);

// Path count by the class recurrences |A_n| = |B_n| = |S_{n-1}|,
// |C_n| = |B_{n-1}| + |C_{n-1}|; F_{2n-1}.
Int count_nondec(int n);

enum class PathClass { A, B, C };
std::string to_string(PathClass c);

class Unclassifiable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Partition of the paths of half-length n:
//   A: last mountain has d >= 2
//   B: d_last = 1 and the previous mountain has d = e
//   C: d_last = 1 and the previous mountain has d > e
// The single-mountain path [(1,1)] fits no clause and raises Unclassifiable.
PathClass classify(const NonDecPath& p);

// The three size-preserving injections behind |S_n| = 3|S_{n-1}| - |S_{n-2}|,
// with their inverses. Inputs are checked against the stated domains.
NonDecPath map_A(const NonDecPath& p);      // A_n -> S_{n-1}
NonDecPath map_A_inv(const NonDecPath& p);  // S_{n-1} -> A_n
NonDecPath map_B(const NonDecPath& p);      // B_n -> S_{n-1}
NonDecPath map_B_inv(const NonDecPath& p);  // S_{n-1} -> B_n
NonDecPath map_C(const NonDecPath& p);      // C_n -> B_{n-1} + C_{n-1}
NonDecPath map_C_inv(const NonDecPath& p);  // B_{n-1} + C_{n-1} -> C_n

}  // namespace a22::nondec
