#include <iostream>
#include <string>
#include <vector>

#include "hnnfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hnnfree::run(args, std::cout, std::cerr);
}
