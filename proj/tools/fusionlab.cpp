#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fusionlab/cli.hpp"

int main(int argc, char** argv) {
  fusionlab::RunOptions options;
  if (const char* budget = std::getenv("WORKBENCH_NODE_BUDGET")) {
    try {
      options.node_budget = std::stoull(budget);
    } catch (const std::exception&) {
      std::cerr << "{\"error\":\"USAGE\",\"message\":\"WORKBENCH_NODE_BUDGET must be a non-negative integer\"}\n";
      return fusionlab::kExitUsage;
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return fusionlab::run(args, std::cout, std::cerr, options);
}
