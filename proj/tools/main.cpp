#include <iostream>

#include "psl2mu/cli.hpp"

int main(int argc, char** argv) {
  return psl2mu::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
