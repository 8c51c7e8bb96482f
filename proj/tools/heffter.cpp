#include <iostream>
#include <string>
#include <vector>

#include "heffter_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return heffter::cli::run(args, std::cout, std::cerr);
}
