#include <iostream>

#include "fusionlab/suite.hpp"

// One line per criterion; nonzero exit when any criterion fails.
int main() {
  int failures = 0;
  fusionlab::run_reproduction_suite(fusionlab::kDefaultNodeBudget, [&](const fusionlab::CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failures += r.pass ? 0 : 1;
  });
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
