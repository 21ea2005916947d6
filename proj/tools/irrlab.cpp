#include <iostream>
#include <string>
#include <vector>

#include "irrlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return irrlab::run_cli(args, std::cout, std::cerr, std::cin);
}
