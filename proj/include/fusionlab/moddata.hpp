#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionlab/chartab.hpp"
#include "fusionlab/fusering.hpp"
#include "fusionlab/grotheq.hpp"
#include "fusionlab/permcore.hpp"

namespace fusionlab {

/// Simple object (a, chi) of Rep D(G): a conjugacy class representative and
/// an irreducible character of its centralizer.
struct DoubleLabel {
  Permutation class_rep;
  std::size_t char_index = 0;  // row in the centralizer's character table
  long dim = 0;                // |class(a)| * chi(e)
};

/// S normalized so that S[0][X] = d_X; T holds the twists.
struct ModularData {
  std::vector<std::string> labels;
  std::vector<DoubleLabel> double_labels;  // empty when loaded from a document
  CycloMatrix s;
  std::vector<Cyclotomic> t;

  std::size_t rank() const { return labels.size(); }
  const Cyclotomic& dim(std::size_t x) const { return s[0][x]; }
  Cyclotomic global_dim() const;
};

/// Labels ordered by conjugacy class (classes as in conjugacy_classes) and
/// then by centralizer character row; unit first. All invariants are checked
/// before returning.
ModularData double_modular_data(const PermGroup& group);

/// Checks S symmetric, S[0] = dims > 0, T[0] = 1, and S * S = D * C for a
/// permutation matrix C of order at most 2. Returns C as a permutation.
/// Throws INVARIANT_FAILURE naming the failed check.
std::vector<std::size_t> verify_modular_data(const ModularData& m);

/// N_XY^Z = (1/D) sum_T S_XT S_YT conj(S_ZT) / d_T, evaluated exactly.
/// Throws SINGULAR_S or NON_INTEGRAL_MULTIPLICITY.
FusionRing verlinde_fusion(const ModularData& m);

/// {X : S[X][Y] = d_X d_Y for every Y in the subset or its duals}. A simple
/// centralizing a set also centralizes every summand of products from it, so
/// the result equals the centralizer of the based closure.
std::vector<std::size_t> centralizer_subset(const ModularData& m, std::span<const std::size_t> subset);
std::vector<std::size_t> muger_center(const ModularData& m);

enum class SymmetryKind { Tannakian, SuperTannakianOnly, NotSymmetric };
std::string symmetry_kind_name(SymmetryKind k);

SymmetryKind is_tannakian_subset(const ModularData& m, std::span<const std::size_t> subset);

/// {X : X centralizes every simple in the support of Y Y* for Y in subset}.
std::vector<std::size_t> projective_centralizer(const ModularData& m, const FusionRing& verlinde,
                                                std::span<const std::size_t> subset);

/// Labels of dimension 1.
std::vector<std::size_t> pointed_part(const ModularData& m);

/// tau+ / sqrt(D) with tau+ = sum T[X] d_X^2.
std::complex<double> central_charge(const ModularData& m);

/// Unit-preserving bijection f with S2[f X][f Y] = S1[X][Y]. The witness is
/// re-checked as a Grothendieck equivalence of the Verlinde rings. Throws
/// SEARCH_BUDGET_EXCEEDED.
std::optional<std::vector<std::size_t>> s_equivalence(const ModularData& a, const ModularData& b,
                                                      std::uint64_t node_budget = kDefaultNodeBudget);

/// Applies a label permutation: new index perm[i] for old label i.
ModularData relabeled(const ModularData& m, std::span<const std::size_t> perm);

}  // namespace fusionlab
