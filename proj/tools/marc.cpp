#include <iostream>
#include <string>
#include <vector>

#include "marc/cli.hpp"

int main(int argc, char** argv) {
  return marc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
