#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionlab/fusering.hpp"

namespace fusionlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Relabeling-invariant summary of a fusion ring. Rings with different
/// fingerprints are never Grothendieck equivalent.
struct Fingerprint {
  std::string type;
  std::vector<std::vector<long>> profiles;  // sorted per-element profiles
  std::vector<long> invertible_data;        // order, then sorted element orders
  std::vector<std::size_t> adjoint_sizes;
  std::vector<long> grading_data;           // order, then sorted element orders

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FusionRing& ring);

/// A bijection with f[0] = 0 and N'(f i, f j, f k) = N(i, j, k).
using EquivalenceWitness = std::vector<std::size_t>;

/// Complete backtracking search; nullopt only after exhausting the tree.
/// Throws SEARCH_BUDGET_EXCEEDED when more than `node_budget` partial
/// assignments are visited.
std::optional<EquivalenceWitness> find_equivalence(const FusionRing& a, const FusionRing& b,
                                                   std::uint64_t node_budget = kDefaultNodeBudget);

bool is_witness(const FusionRing& a, const FusionRing& b, const EquivalenceWitness& w);

struct PropertyReport {
  bool tensor = false;
  bool dims = false;
  bool invertibles = false;
  bool duals = false;
  bool adjoint_series = false;
  bool grading_group = false;

  bool all() const { return tensor && dims && invertibles && duals && adjoint_series && grading_group; }
};

/// Recomputes each consequence of a Grothendieck equivalence on the
/// witness: dimensions, invertibles, duals, adjoint series and the induced
/// isomorphism of universal grading groups.
PropertyReport verify_properties(const FusionRing& a, const FusionRing& b, const EquivalenceWitness& w);

}  // namespace fusionlab
