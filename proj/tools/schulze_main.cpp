#include <iostream>
#include <string>
#include <vector>

#include "schulze_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return schulze::cli::run(args, std::cout, std::cerr);
}
