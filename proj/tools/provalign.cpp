#include <iostream>

#include "provalign/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return provalign::cli::run(args, std::cout, std::cerr);
}
