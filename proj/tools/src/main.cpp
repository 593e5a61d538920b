#include <iostream>
#include <string>
#include <vector>

#include "padic_ell_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return padic_ell::cli::run(args, std::cout, std::cerr);
}
