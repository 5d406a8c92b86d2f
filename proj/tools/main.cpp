#include <iostream>

#include "wqo/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wqo::cli::run(args, std::cout, std::cerr);
}
