#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fusionlab/grotheq.hpp"

namespace fusionlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The reproduction table: eleven checks over the named groups, pairs and
/// doubles, each with exact expected values. Exceptions inside a check are
/// reported as failures of that check.
std::vector<CriterionResult> run_reproduction_suite(std::uint64_t node_budget = kDefaultNodeBudget,
                                                    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  name (0.12 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace fusionlab
