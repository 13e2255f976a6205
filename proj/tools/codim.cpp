#include <iostream>

#include "codim/cli.hpp"

int main(int argc, char** argv) {
  return codim::run_cli(argc, argv, std::cout, std::cerr);
}
