#include <iostream>

#include "momentfit/cli.hpp"

int main(int argc, char** argv) {
  return momentfit::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
