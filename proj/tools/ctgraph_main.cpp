#include <iostream>
#include <string>
#include <vector>

#include "ctgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ctgraph::cli::run(args, std::cout, std::cerr);
}
