#include <iostream>
#include <string>
#include <vector>

#include "steintile/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto result = steintile::cli::run(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
