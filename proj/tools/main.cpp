#include <iostream>
#include <string>
#include <vector>

#include "z2mem/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return z2mem::run_cli(args, std::cout, std::cerr);
}
