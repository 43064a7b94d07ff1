#include <iostream>

#include "hypernil/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypernil::cli::run(args, std::cout, std::cerr);
}
