#include <iostream>

#include "vbraid/cli.hpp"

int main(int argc, char** argv) {
  return vbraid::cli::run(argc, argv, std::cout, std::cerr);
}
