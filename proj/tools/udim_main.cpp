#include <iostream>
#include <string>
#include <vector>

#include "udim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return udim::cli::run(args, {std::cin, std::cout, std::cerr});
}
