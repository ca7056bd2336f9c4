#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return earcolor::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
