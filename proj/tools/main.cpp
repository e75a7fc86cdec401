#include <iostream>
#include <string>
#include <vector>

#include "octvec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return octvec::runCli(args, std::cout, std::cerr);
}
