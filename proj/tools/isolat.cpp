#include <iostream>
#include <string>
#include <vector>

#include "isolat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isolat::run_command(args, std::cout, std::cerr);
}
