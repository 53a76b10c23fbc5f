#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "lvdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  lvd::RunOptions options;
  options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  return lvd::run_command(args, std::cout, std::cerr, options);
}
