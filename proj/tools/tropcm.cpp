#include <iostream>
#include <string>
#include <vector>

#include "tropcm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tropcm::run_command(args, std::cout, std::cerr);
}
