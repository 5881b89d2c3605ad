#include <iostream>
#include <string>
#include <vector>

#include "ubc/dsl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ubc::run_cli(args, std::cout, std::cerr);
}
