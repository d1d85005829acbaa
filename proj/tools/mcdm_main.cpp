#include <iostream>
#include <string>
#include <vector>

#include "mcdm/cli.hpp"

int main(int argc, char** argv) {
  return mcdm::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
