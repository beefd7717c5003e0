#include <iostream>
#include <string>
#include <vector>

#include "mvmlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvmlab::run_cli(args, std::cout, std::cerr);
}
