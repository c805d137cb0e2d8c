#include <iostream>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
  return fano::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
