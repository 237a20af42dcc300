#include <iostream>
#include <string>
#include <vector>

#include "doat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return doat::cli::run(args, std::cout, std::cerr);
}
