#include <iostream>
#include <string>
#include <vector>

#include "rhn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rhn::cli::run(args, std::cout, std::cerr);
}
