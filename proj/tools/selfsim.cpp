#include <iostream>
#include <string>
#include <vector>

#include "selfsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selfsim::run_cli(args, std::cout, std::cerr);
}
