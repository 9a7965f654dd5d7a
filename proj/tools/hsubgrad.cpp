#include <iostream>

#include "hsubgrad/cli.hpp"

int main(int argc, char** argv) {
  return hsubgrad::cli_main(argc, argv, std::cout, std::cerr);
}
