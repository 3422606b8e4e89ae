#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fusionlab/fusering.hpp"
#include "fusionlab/grotheq.hpp"

namespace fusionlab {

enum class Verdict { Solvable, NotSolvable, Unknown };

std::string verdict_name(Verdict v);  // SOLVABLE, NOT_SOLVABLE, UNKNOWN

struct RuleEvaluation {
  std::string rule;           // R1 ... R8
  bool fired = false;
  std::string justification;
  std::string reference;      // the fact the rule rests on
};

struct SolvabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::vector<RuleEvaluation> trace;
  std::string matched;        // catalog entry name when R7 fired
};

/// Reference ring known to be non-solvable. The type is cheap; the ring is
/// built on first use only, and both are cached.
class CatalogEntry {
 public:
  CatalogEntry(std::string name, std::function<TypeSignature()> type, std::function<FusionRing()> ring);

  const std::string& name() const { return name_; }
  const TypeSignature& type() const;
  const FusionRing& ring() const;

 private:
  struct State;
  std::string name_;
  std::shared_ptr<State> state_;
};

/// Rep S5, Rep S6, Rep S7, J5, K5, J7, K7, H5, L5, B5, B6, B5*.
const std::vector<CatalogEntry>& default_catalog();

/// First-match evaluation of R1 ... R8. Every rule tried is recorded in the
/// trace. A search that runs out of budget leaves its rule unfired.
SolvabilityVerdict solvability_verdict(const FusionRing& ring, const std::vector<CatalogEntry>& catalog = default_catalog(),
                                       std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace fusionlab
