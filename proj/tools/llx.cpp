#include <unistd.h>

#include <iostream>

#include "llx_cli.hpp"

int main(int argc, char** argv) {
  return llx::cli::run(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
