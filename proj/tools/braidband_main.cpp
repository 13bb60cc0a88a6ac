#include <iostream>
#include <vector>

#include "braidband/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidband::run_cli(args, std::cout, std::cerr);
}
