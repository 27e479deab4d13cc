#include <iostream>
#include <string>
#include <vector>

#include "f4l/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f4l::run(args, std::cout, std::cerr);
}
