#include <iostream>
#include <string>
#include <vector>

#include "posetmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return posetmat::run(args, std::cout, std::cerr);
}
