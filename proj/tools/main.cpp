#include <iostream>

#include "multibasis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return multibasis::run_cli(args, std::cout, std::cerr);
}
