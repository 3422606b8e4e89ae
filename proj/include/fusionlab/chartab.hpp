#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fusionlab/cyclo.hpp"
#include "fusionlab/fusering.hpp"
#include "fusionlab/permcore.hpp"

namespace fusionlab {

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

struct CharacterTable {
  PermGroup group;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;       // element index -> class index
  std::vector<std::size_t> inverse_class;  // class of g^-1
  std::size_t exponent = 1;
  std::uint64_t prime = 0;                 // modulus used for the eigenspace split
  std::vector<std::vector<Cyclotomic>> chars;  // rows: characters, columns: classes
  std::vector<long> degrees;

  std::size_t size() const { return chars.size(); }
  std::size_t class_index(const Permutation& g) const { return class_of[group.require_index(g)]; }
  /// Value of character `row` at an arbitrary group element.
  const Cyclotomic& value(std::size_t row, const Permutation& g) const { return chars[row][class_index(g)]; }
  /// Row index of the complex conjugate character.
  std::size_t dual_row(std::size_t row) const;
};

/// Burnside-Dixon: class-sum eigenspaces split over F_p, values lifted to
/// exact cyclotomics. Rows are sorted by (degree, values), trivial first;
/// columns follow conjugacy_classes().
CharacterTable character_table(const PermGroup& group);

/// (1/|G|) sum_j |C_j| a_j conj(b_j)
Cyclotomic inner_product(const CharacterTable& table, std::span<const Cyclotomic> a,
                         std::span<const Cyclotomic> b);

/// Fusion ring of Rep G with basis the rows of the table.
FusionRing rep_g_fusion_ring(const CharacterTable& table);

/// Matrices rho(g) for every group element (by element index) of an
/// irreducible representation affording character `row`. Built by cutting
/// the isotypic piece out of a monomial representation induced from a
/// linear character of a subgroup; UNSUPPORTED when no such subgroup with
/// multiplicity one exists among cyclic and 2-generated subgroups.
std::vector<CycloMatrix> irreducible_representation(const CharacterTable& table, std::size_t row);

CycloMatrix matrix_multiply(const CycloMatrix& a, const CycloMatrix& b);
Cyclotomic matrix_trace(const CycloMatrix& a);
CycloMatrix identity_matrix(std::size_t n);

}  // namespace fusionlab
