#include <vector>

#include "thdet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thdet::cli::run(args);
}
