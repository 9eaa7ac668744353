#include <iostream>
#include <string>
#include <vector>

#include "shiftmax/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return shiftmax::cli::run(args, std::cout, std::cerr);
}
