#include <iostream>

#include "paratask/cli/run.hpp"

int main(int argc, char** argv) {
  return paratask::cli::run(argc, argv, std::cout, std::cerr);
}
