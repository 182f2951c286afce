#include "eqdecomp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return eqdecomp::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
