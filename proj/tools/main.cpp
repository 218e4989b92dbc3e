#include <iostream>
#include <string>
#include <vector>

#include "revlex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return revlex::cli::run(args, std::cout, std::cerr);
}
