#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fusionlab/chartab.hpp"
#include "fusionlab/fusering.hpp"
#include "fusionlab/permcore.hpp"

namespace fusionlab {

/// Exact factorization G = F * Gamma with the induced actions, all given by
/// element indices of the subgroups. For s in Gamma and x in F the product
/// s * x factors uniquely as (s |> x) * (s <| x) with s |> x in F and
/// s <| x in Gamma.
struct MatchedPair {
  PermGroup ambient;
  PermGroup f;
  PermGroup gamma;
  std::vector<std::size_t> left;        // s <| x   : [s * |F| + x] -> Gamma
  std::vector<std::size_t> right;       // s |> x   : [s * |F| + x] -> F
  std::vector<std::size_t> dual_left;   // x <|' s  : [x * |Gamma| + s] -> F
  std::vector<std::size_t> dual_right;  // x |>' s  : [x * |Gamma| + s] -> Gamma

  std::size_t act_left(std::size_t s, std::size_t x) const { return left[s * f.order() + x]; }
  std::size_t act_right(std::size_t s, std::size_t x) const { return right[s * f.order() + x]; }

  /// Right action of F on Gamma through <|, for orbit computations.
  GroupAction gamma_action() const;
};

/// Throws NOT_EXACT_FACTORIZATION unless |F||Gamma| = |G| and F meets Gamma
/// trivially; all action identities are re-verified.
MatchedPair matched_pair_from_factorization(const PermGroup& g, const PermGroup& f, const PermGroup& gamma);

/// The pair with the roles of F and Gamma exchanged (factorization G = Gamma * F).
MatchedPair swapped(const MatchedPair& mp);

/// "(Gamma,F in G)" such as "(A4,C5 in A5)", or a name J<n>, K<n>, H<n>,
/// L<n>, B<n>, B<n>*. Subgroup specs are embedded in G's degree.
MatchedPair parse_pair_spec(std::string_view spec);

// Named pairs: H = k^Gamma # kF.
MatchedPair pair_j(std::size_t n);       // Gamma = S_{n-1}, F = C_n in S_n
MatchedPair pair_k(std::size_t n);       // Gamma = A_{n-1}, F = C_n in A_n
MatchedPair pair_h(std::size_t n);       // J with roles swapped
MatchedPair pair_l(std::size_t n);       // K with roles swapped
MatchedPair pair_b(std::size_t n);       // Gamma = A_n, F = <(1,2)> in S_n
MatchedPair pair_b_dual(std::size_t n);  // B with roles swapped

/// Group on pairs (x, s) with (x, s)(y, t) = (x (s |> y), (s <| y) t), in its
/// regular representation; element index of (x, s) is x * |Gamma| + s.
/// Throws GROUP_LAW_FAILURE if the law fails or (x, s) -> x s is not an
/// isomorphism onto the ambient group.
PermGroup bowtie_group(const MatchedPair& mp);

/// Simple module of k^Gamma # kF attached to an F-orbit on Gamma and an
/// irreducible character of the stabilizer of the orbit representative.
struct ExtIrrep {
  std::size_t orbit_rep = 0;                 // index in Gamma
  std::vector<std::size_t> orbit;            // indices in Gamma, ascending
  std::vector<std::size_t> coset_reps;       // c_t in F with rep <| c_t = t, per orbit point
  PermGroup stabilizer;
  std::shared_ptr<const CharacterTable> stabilizer_table;
  std::size_t stab_char = 0;                 // row of stabilizer_table
  long dim = 0;
  std::string label;
};

struct SplitIrreps {
  std::vector<ExtIrrep> irreps;
  TypeSignature type;
};

SplitIrreps split_irreps(const MatchedPair& mp);

/// Dimensions and counts of the simples without building characters.
TypeSignature split_type(const MatchedPair& mp);

/// Fusion ring of Rep(k^Gamma # kF) from characters and the coproduct.
FusionRing split_fusion_ring(const MatchedPair& mp);
FusionRing split_fusion_ring(const MatchedPair& mp, const SplitIrreps& irreps);

struct ExtIrrepMatrices {
  std::vector<CycloMatrix> idempotents;  // e_t for every t in Gamma
  std::vector<CycloMatrix> group;        // x for every x in F
};

/// Explicit action on the induced module, block (t', t) of x equal to
/// rho_U(c_t' x c_t^-1) when t' = t <| x^-1.
ExtIrrepMatrices ext_irrep_matrices(const MatchedPair& mp, const ExtIrrep& irrep);

/// Checks e_s e_t = delta e_s, sum e_t = 1, x e_t = e_(t <| x^-1) x and
/// that x -> rho(x) is a homomorphism.
bool verify_ext_irrep_matrices(const MatchedPair& mp, const ExtIrrepMatrices& m);

/// Group of one-dimensional representations: F^ x| Gamma_0 where Gamma_0 is
/// the set of <|-fixed points of Gamma, acting on characters through <|'.
struct DualInvertibles {
  PermGroup group;                     // regular representation
  std::vector<std::size_t> table;      // element (chi, s) has index chi * |Gamma_0| + s
  std::size_t character_count = 0;     // |F^|
  std::vector<std::size_t> fixed_points;  // Gamma_0 as indices in Gamma
  std::size_t center_order = 0;
  std::string name;
};

DualInvertibles dual_invertibles(const MatchedPair& mp);

/// Type of the Z_p-equivariantization of a based ring under a basis
/// permutation of order dividing p, assuming trivial cocycles: fixed
/// elements give p simples of the same dimension, free orbits one simple
/// of p times the dimension. Throws NOT_AUTOMORPHISM.
TypeSignature equivariantization_type(const FusionRing& ring, std::span<const std::size_t> action, std::size_t p);

/// Basis permutation of the group ring of G induced by conjugation by g
/// (g may lie outside G as long as it normalizes G).
std::vector<std::size_t> conjugation_action(const PermGroup& group, const Permutation& g);

}  // namespace fusionlab
