#include <iostream>
#include <string>
#include <vector>

#include "fgcover/cli.hpp"

int main(int argc, char** argv) {
  return fgc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
