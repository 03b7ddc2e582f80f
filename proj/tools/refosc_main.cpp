#include <iostream>
#include <string>
#include <vector>

#include "refosc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return refosc::cli_run(args, std::cout, std::cerr);
}
