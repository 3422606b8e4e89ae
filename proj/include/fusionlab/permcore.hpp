#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusionlab {

using Point = std::uint16_t;

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Products compose left to right: (f * g)(x) = g(f(x)). Every group law in
/// the library (matched pairs, bicrossed products, doubles) is written in
/// terms of this product, so the convention only has to be fixed here.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation with 1-based points: "(1,2,3)(4,5)", "()", or the
  /// compact single-digit form "(123)(45)". Points beyond `degree` are rejected.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long exponent) const;
  bool is_identity() const;
  std::size_t order() const;
  int sign() const;

  /// Cycle notation, 1-based, comma separated; the identity prints as "()".
  std::string to_cycles() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultOrderCap = 10'000;

/// A finite permutation group with all elements materialized in
/// lexicographic order of their image sequences. Index 0 is the identity.
/// Copies share the immutable element store.
class PermGroup {
 public:
  PermGroup();

  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t order_cap = kDefaultOrderCap);

  /// Wraps an element list that is already known to be a group. Closure is
  /// checked; the list is re-sorted into canonical order.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  /// Regular representation of a group given by its Cayley table on
  /// 0..n-1 (table[a*n+b] = a*b, element 0 the identity).
  static PermGroup from_cayley_table(std::size_t n, std::span<const std::size_t> table);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& generators() const;
  const Permutation& element(std::size_t i) const { return elements()[i]; }

  std::optional<std::size_t> index_of(const Permutation& g) const;
  std::size_t require_index(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

bool operator==(const PermGroup& a, const PermGroup& b);

/// Labels 0..domain_size-1 permuted by a group: table[g * domain_size + x]
/// is the image of label x under element index g.
struct GroupAction {
  PermGroup group;
  std::size_t domain_size = 0;
  std::vector<std::size_t> table;

  std::size_t apply(std::size_t g, std::size_t x) const { return table[g * domain_size + x]; }

  /// Checks e.x = x and (gh).x = g.(h.x) for the right action written
  /// x.(gh) = (x.g).h, which is how every action in the library composes.
  void validate() const;
};

struct ConjugacyClass {
  Permutation representative;
  std::vector<std::size_t> members;  // element indices, ascending
  std::size_t size() const { return members.size(); }
};

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group);

PermGroup centralizer_in(const PermGroup& group, const Permutation& g);

struct Orbit {
  std::size_t representative = 0;
  std::vector<std::size_t> points;  // ascending
  PermGroup stabilizer;
};

/// Orbits sorted by (size, representative); the representative is the
/// smallest label in its orbit.
std::vector<Orbit> orbits(const GroupAction& action);

struct StructureInvariants {
  PermGroup center;
  PermGroup commutator_subgroup;
  std::vector<std::size_t> abelianization_type;  // invariant factors d1 | d2 | ...
  bool is_solvable = false;
  bool is_nilpotent = false;
};

StructureInvariants structure_invariants(const PermGroup& group);

// Subgroup toolkit used across modules.
PermGroup subgroup_generated(const PermGroup& ambient, std::span<const Permutation> generators);
PermGroup subgroup_from_indices(const PermGroup& ambient, std::span<const std::size_t> indices);
PermGroup commutator(const PermGroup& ambient, const PermGroup& a, const PermGroup& b);
PermGroup center(const PermGroup& group);
bool is_normal_in(const PermGroup& subgroup, const PermGroup& group);
std::vector<std::size_t> element_order_profile(const PermGroup& group);  // sorted element orders

/// Invariant factors of an abelian group from the orders of its elements.
std::vector<std::size_t> abelian_invariants(std::span<const std::size_t> element_orders);

/// Invariant factors of group / normal_subgroup, which must be abelian.
std::vector<std::size_t> abelian_quotient_invariants(const PermGroup& group,
                                                     const PermGroup& normal_subgroup);

PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// An isomorphism as a map from element indices of `a` to those of `b`.
std::optional<std::vector<std::size_t>> find_isomorphism(const PermGroup& a, const PermGroup& b);

/// Best-effort name ("Z2 x Z2", "D5", "S4", "Z2 x S3", ...) obtained by exact
/// isomorphism tests against a built-in list of small groups; falls back to
/// a structural description.
std::string group_name(const PermGroup& group);

// Named families. All act on the stated number of points.
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);          // <(1,2,...,n)>
PermGroup dihedral_group(std::size_t n);        // order 2n on n points, n >= 3
PermGroup dicyclic_group(std::size_t order);    // regular representation, order % 4 == 0
PermGroup abelian_group(std::span<const std::size_t> invariants);
PermGroup trivial_group(std::size_t degree = 1);

/// Parses S<n>, A<n>, C<n> (or Z<n>), D<n>, Q<n> (dicyclic of order n), a
/// bracketed generator list "[(1,2,3),(1,2)]", or products "Z2 x S3". When `degree` is given, named families are embedded
/// on the first points of that degree and C<n> means <(1,2,...,n)>.
PermGroup parse_group_spec(std::string_view spec, std::optional<std::size_t> degree = std::nullopt);

}  // namespace fusionlab
