#pragma once

#include <string>
#include <vector>

namespace a22::verify {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;  // first failure, or a short summary when ok
};

// Fibonacci count identities for all three families, m ranges scaled off
// max_n to match the acceptance ranges at max_n = 7.
std::vector<Check> counts_suite(int max_n);

// Cross-route agreement: z recurrence vs direct sums, snake vs mutation vs
// greedy vs coefficient-free recurrence, coefficient sums, involutions.
std::vector<Check> oracles_suite(int max_n);

// phi/theta/psi round trips, surjectivity counts, letter-word image.
std::vector<Check> bijections_suite(int max_n);

std::vector<Check> all_suites(int max_n);

}  // namespace a22::verify
