#include <iostream>

#include "moduli/cli.hpp"

int main(int argc, char** argv) {
  return moduli::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
