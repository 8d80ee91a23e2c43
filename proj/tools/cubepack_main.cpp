#include <vector>

#include "cubepack/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubepack::run_cli(args);
}
