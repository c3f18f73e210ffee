#include <iostream>
#include <string>
#include <vector>

#include "qdisc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qdisc::run_cli(args, std::cout, std::cerr);
}
