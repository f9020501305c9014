#include <iostream>

#include "pathcx/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pathcx::cli::run(args, std::cout, std::cerr);
}
