#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "qlm/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qlm::run_cli(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
