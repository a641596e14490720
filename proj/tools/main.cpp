#include <iostream>
#include <string>
#include <vector>

#include "interfere/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return interfere::cli::dispatch(args, std::cout, std::cerr);
}
