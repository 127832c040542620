#include <iostream>
#include <string>
#include <vector>

#include "girthforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return girthforge::cli::run(args, std::cout, std::cerr);
}
