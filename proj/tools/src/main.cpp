#include <iostream>

#include "albert_cli/cli.hpp"

int main(int argc, char** argv) {
  return albert::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
