#include <iostream>

#include "rootspace/cli.hpp"

int main(int argc, char** argv) {
  return rootspace::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
