#include <iostream>

#include "lamsub/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lamsub::run(args, std::cout, std::cerr);
}
