#include <iostream>

#include "cuckoo/cli.hpp"

int main(int argc, char** argv) {
  return cuckoo::cli::run_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
