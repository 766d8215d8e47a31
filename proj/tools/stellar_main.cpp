#include <iostream>
#include <string>
#include <vector>

#include "stellar/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return stellar::run(args, std::cin, std::cout, std::cerr);
}
