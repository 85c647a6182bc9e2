#include <iostream>
#include <string>
#include <vector>

#include "degcomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return degcomp::run(args, std::cout, std::cerr);
}
