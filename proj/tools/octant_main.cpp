#include <iostream>
#include <string>
#include <vector>

#include "octant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return octant::run_cli(args, std::cout, std::cerr);
}
