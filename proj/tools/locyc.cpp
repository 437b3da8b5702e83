#include <iostream>
#include <string>
#include <vector>

#include "locyc/harness/cli.hpp"

int main(int argc, char** argv) {
  return locyc::harness::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
