#include <iostream>

#include "knotalt/cli.hpp"

int main(int argc, char** argv) {
  return knotalt::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
