#include <iostream>

#include "hypack_cli.hpp"

int main(int argc, char** argv) {
  try {
    return hypack::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "hypack: " << e.what() << '\n';
    return hypack::cli::kExitUsage;
  }
}
