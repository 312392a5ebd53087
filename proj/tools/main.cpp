#include <iostream>

#include "r2m/cli.hpp"

int main(int argc, char** argv) {
  return r2m::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
