#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a22::cli {

// Command dispatch behind the a22 binary. Exit codes: 0 success,
// 1 verification failure, 2 usage or input data error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace a22::cli
