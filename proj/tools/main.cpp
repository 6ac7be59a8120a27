#include <iostream>
#include <string>
#include <vector>

#include "pyth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pyth::cli::run(args, std::cout, std::cerr);
}
