#include <iostream>

#include "salpeter/cli/commands.hpp"

int main(int argc, char** argv) {
  return salpeter::cli::run_main(argc, argv, std::cout, std::cerr);
}
