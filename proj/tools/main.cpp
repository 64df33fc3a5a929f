#include <iostream>
#include <string>
#include <vector>

#include "a22/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return a22::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
