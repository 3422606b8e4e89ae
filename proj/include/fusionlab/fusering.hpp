#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusionlab/permcore.hpp"

namespace fusionlab {

/// A unital based ring with basis 0..rank-1, unit 0.
/// N(i, j, k) is the multiplicity of k in the product i*j.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::vector<std::size_t> dual, std::vector<int> tensor);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& dual() const { return dual_; }
  std::size_t dual(std::size_t i) const { return dual_[i]; }
  const std::vector<int>& tensor() const { return tensor_; }

  int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * rank() + j) * rank() + k];
  }

  /// Basis elements occurring in i*j, ascending.
  std::vector<std::size_t> support(std::size_t i, std::size_t j) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> dual_;
  std::vector<int> tensor_;
};

/// Throws AXIOM_VIOLATION naming the axiom and witness indices.
void validate(const FusionRing& ring);

struct FPDims {
  std::vector<double> numeric;
  bool integral = false;
  std::vector<long> exact;  // filled when integral
  double global = 0;
  long global_exact = 0;    // filled when integral
};

FPDims fp_dims(const FusionRing& ring);

struct TypeSignature {
  std::vector<std::pair<long, std::size_t>> entries;  // (dimension, count), dimension ascending

  /// "(1,10; 5,2)"
  std::string to_string() const;
  static TypeSignature parse(const std::string& text);
  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;
};

/// Requires integral FP dimensions (UNSUPPORTED otherwise).
TypeSignature type_signature(const FusionRing& ring);
TypeSignature type_signature(const FPDims& dims);

struct InvertibleGroup {
  std::vector<std::size_t> basis;   // ascending; basis[0] = unit
  std::vector<std::size_t> table;   // local indices, table[a*n+b]
  PermGroup group;                  // regular representation
  std::string name;

  std::size_t order() const { return basis.size(); }
};

InvertibleGroup invertibles(const FusionRing& ring);

/// {g invertible : g*x contains x}, as basis indices.
std::vector<std::size_t> invertible_stabilizer(const FusionRing& ring, std::size_t x);

/// Least based subring containing the seed, as sorted basis indices.
std::vector<std::size_t> subring_generated(const FusionRing& ring, std::span<const std::size_t> seed);

struct AdjointSeries {
  std::vector<std::vector<std::size_t>> chain;  // chain[0] = everything
  bool reaches_unit = false;
};

AdjointSeries adjoint_series(const FusionRing& ring);

struct GradingDecomposition {
  std::vector<std::vector<std::size_t>> blocks;  // blocks[0] holds the unit
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> group_table;  // on block indices
  std::size_t neutral_block = 0;
  PermGroup group;                       // regular representation on blocks

  std::size_t order() const { return blocks.size(); }
};

GradingDecomposition universal_grading(const FusionRing& ring);

/// Kernels of the surjections of the grading group onto Z_q, each given as
/// the sorted basis indices of the corresponding trivial component.
std::vector<std::vector<std::size_t>> cyclic_quotient_components(const FusionRing& ring,
                                                                  const GradingDecomposition& grading,
                                                                  std::size_t q);

bool is_nilpotent(const FusionRing& ring);
bool is_cyclically_nilpotent(const FusionRing& ring);

/// The based subring on `subset` (must be a based subring), re-indexed in
/// ascending order of the original indices.
FusionRing restricted(const FusionRing& ring, std::span<const std::size_t> subset);

/// The same ring with element i renamed to perm[i] (perm[0] must be 0).
FusionRing relabeled(const FusionRing& ring, std::span<const std::size_t> perm);

/// Z[G] with basis ordered as the group's canonical element list.
FusionRing group_ring(const PermGroup& group);

/// Checks that a basis permutation preserves the fusion tensor and unit.
bool is_ring_automorphism(const FusionRing& ring, std::span<const std::size_t> perm);

}  // namespace fusionlab
