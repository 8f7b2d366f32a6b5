#include <iostream>
#include <string>
#include <vector>

#include "largeness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return largeness::cli::run(args, std::cout, std::cerr);
}
