#include <iostream>

#include "syzygy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return syzygy::run_cli(args, std::cout, std::cerr);
}
