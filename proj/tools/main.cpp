#include <iostream>

#include "odrc/cli.hpp"

int main(int argc, char** argv) {
  return odrc::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
