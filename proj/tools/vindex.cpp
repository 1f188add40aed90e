#include <iostream>
#include <string>
#include <vector>

#include "vindex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vindex::cli::run(args, std::cout, std::cerr);
}
