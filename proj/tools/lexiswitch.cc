#include <iostream>
#include <string>
#include <vector>

#include "lexiswitch/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lexiswitch::run_cli(args, std::cin, std::cout, std::cerr);
}
