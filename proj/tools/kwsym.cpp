#include <iostream>
#include <string>
#include <vector>

#include "kwsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kwsym::run_cli(args, std::cout, std::cerr);
}
