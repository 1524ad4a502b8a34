#include <iostream>

#include "demkit/cli.hpp"

int main(int argc, char** argv) {
  return demkit::run_cli(argc, argv, std::cout, std::cerr);
}
