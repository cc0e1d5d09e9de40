#include <iostream>
#include <string>
#include <vector>

#include "wzlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wzlab::cli::run(args, std::cout, std::cerr);
}
