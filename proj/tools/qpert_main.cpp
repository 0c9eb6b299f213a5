#include <iostream>
#include <string>
#include <vector>

#include "qpert_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qpert::cli::run(args, std::cout, std::cerr);
}
