#include <iostream>
#include <string>
#include <vector>

#include "minpres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minpres::cli::run(args, std::cout, std::cerr);
}
