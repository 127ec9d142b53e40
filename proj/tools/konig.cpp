#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return konig::cli::run_cli(std::move(args), std::cout, std::cerr);
  } catch (const konig::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return konig::cli::kExitInvariant;
  }
}
