#include <iostream>
#include <string>
#include <vector>

#include "maxgenus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxgenus::cli::run(args, std::cout, std::cerr);
}
