#include <iostream>
#include <string>
#include <vector>

#include "equicount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return equicount::cli::run(args, std::cout);
}
