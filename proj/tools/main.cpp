#include <iostream>
#include <string>
#include <vector>

#include "isokit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isokit::run_cli(args, std::cout, std::cerr);
}
