#include <vector>

#include "bsymb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bsymb::cli::run(args);
}
