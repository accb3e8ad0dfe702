#include <iostream>
#include <vector>

#include "xx0/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xx0::cli::run(args, std::cout, std::cerr);
}
