#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> cache;
  if (const char* env = std::getenv("BBW_ULRICH_CACHE"); env && *env) cache = env;
  return bbwu::cli::run(args, std::cout, std::cerr, cache);
}
