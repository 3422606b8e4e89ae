#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fusionlab/error.hpp"
#include "fusionlab/grotheq.hpp"

namespace fusionlab {

struct RunOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;   // input fails a mathematical check
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

int exit_code_for(ErrorCode code);

/// Runs one subcommand; `args` excludes the program name. Documents go to
/// `out`, diagnostics (one JSON object per line) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options = {});

}  // namespace fusionlab
