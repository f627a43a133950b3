#include <iostream>
#include <string>
#include <vector>

#include "cannon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cannon::run_cli(args, std::cout, std::cerr);
}
