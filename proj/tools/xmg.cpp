#include <iostream>
#include <string>
#include <vector>

#include "xmg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xmg::run_command(args, std::cout, std::cerr);
}
