#pragma once

#include <string>

#include "a22/dyck.hpp"
#include "a22/nondec.hpp"
#include "a22/snake.hpp"

namespace a22::bij {

class IncompatiblePair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The shared letter encoding: a word of n+1 characters over {O, U, V} with
// no "UV" factor and not starting with V. Position i reads the state of
// (u_i, v_i) on the Dyck path side, or of column 2i on the matching side.
bool letters_valid(const std::string& letters);
void require_letters(const std::string& letters);  // throws on violation

// Step 1: compatible pair -> letters (U where u_i in S1, V where v_i in S2,
// O otherwise); and its inverse.
std::string pair_to_letters(const dyck::CompatiblePair& sel);
dyck::CompatiblePair letters_to_pair(const std::string& letters);

// Step 1': perfect matching on H_{2n+1} -> letters (U at a side pair on
// columns 2i,2i+1; V at a side pair on 2i-1,2i; O at a rung on column 2i).
std::string matching_to_letters(const snake::PerfectMatching& p);

// Steps 2-4: letters -> blocks [U..U O V..V] -> mountains. A block with a
// U's and b V's becomes the mountain (a+b+1, a+1); the trailing U-only block
// becomes the last mountain by the complementary-count formula.
nondec::NonDecPath letters_to_path(const std::string& letters);
std::string path_to_letters(const nondec::NonDecPath& p);

// phi: matching on H_{2n+1} -> compatible pair on D^{(n+1) x n}, via
//   u_i in S1  <=>  sideA(2i), sideB(2i) in P
//   v_i in S2  <=>  sideA(2i-1), sideB(2i-1) in P
dyck::CompatiblePair phi(const snake::PerfectMatching& p);

// phi^-1: places the side pairs dictated by (S1, S2) and fills every
// remaining column with its rung. Throws IncompatiblePair when the selection
// fails the gap criterion.
snake::PerfectMatching phi_inv(const dyck::CompatiblePair& sel);

// theta: compatible pair -> nondecreasing path of length 2n+4; theta^-1 back.
nondec::NonDecPath theta(const dyck::CompatiblePair& sel);
dyck::CompatiblePair theta_inv(const nondec::NonDecPath& p);

// psi: matching -> nondecreasing path, built directly from the Step 1'
// letters; agrees with theta(phi(p)) pointwise.
nondec::NonDecPath psi(const snake::PerfectMatching& p);

}  // namespace a22::bij
