#include <iostream>

#include "fibfub/cli.hpp"

int main(int argc, char** argv) {
  return fibfub::cli::run_cli(argc, argv, std::cout, std::cerr);
}
