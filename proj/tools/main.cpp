#include <iostream>

#include "limattn/cli.hpp"

int main(int argc, char** argv) {
  return limattn::run_cli(argc, argv, std::cout, std::cerr);
}
