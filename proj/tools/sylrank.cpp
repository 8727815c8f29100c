#include <iostream>

#include "sylrank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sylrank::cli::run(args, std::cout, std::cerr);
}
