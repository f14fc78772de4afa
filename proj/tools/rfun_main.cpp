#include <iostream>

#include "rfun/cli.hpp"

int main(int argc, char** argv) {
  return rfun::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
