#include <iostream>
#include <string>
#include <vector>

#include "braidcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidcalc::run_cli(args, std::cin, std::cout, std::cerr);
}
