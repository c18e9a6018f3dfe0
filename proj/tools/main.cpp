#include <iostream>
#include <string>
#include <vector>

#include "ampalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ampalg::run(args, std::cout, std::cerr);
}
