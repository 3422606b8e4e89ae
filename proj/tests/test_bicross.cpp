#include <doctest.h>

#include <functional>
#include <numeric>

#include "fusionlab/bicross.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/grotheq.hpp"

using namespace fusionlab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

// Oracle: factor s*x as y*t by searching F x Gamma.
void check_actions_by_search(const MatchedPair& mp) {
  for (std::size_t s = 0; s < mp.gamma.order(); ++s) {
    for (std::size_t x = 0; x < mp.f.order(); ++x) {
      const Permutation prod = mp.gamma.element(s) * mp.f.element(x);
      std::size_t hits = 0;
      for (std::size_t y = 0; y < mp.f.order(); ++y) {
        for (std::size_t t = 0; t < mp.gamma.order(); ++t) {
          if (mp.f.element(y) * mp.gamma.element(t) != prod) continue;
          ++hits;
          CHECK(mp.act_right(s, x) == y);
          CHECK(mp.act_left(s, x) == t);
        }
      }
      CHECK(hits == 1);
    }
  }
}

// Character of a module at e_s # x from its matrices.
std::vector<Cyclotomic> module_character(const MatchedPair& mp, const ExtIrrepMatrices& m) {
  std::vector<Cyclotomic> chi(mp.gamma.order() * mp.f.order());
  for (std::size_t s = 0; s < mp.gamma.order(); ++s) {
    for (std::size_t x = 0; x < mp.f.order(); ++x) chi[s * mp.f.order() + x] = matrix_trace(matrix_multiply(m.idempotents[s], m.group[x]));
  }
  return chi;
}

// Oracle: the tensor product character from the coproduct
// D(e_s # x) = sum_{gh=s} e_g # (h |> x) (x) e_h # x, compared with the
// decomposition recorded in the fusion ring.
void check_tensor_by_coproduct(const MatchedPair& mp) {
  SplitIrreps irreps = split_irreps(mp);
  FusionRing ring = split_fusion_ring(mp, irreps);
  const std::size_t n = ring.rank(), nf = mp.f.order(), ng = mp.gamma.order();
  std::vector<std::vector<Cyclotomic>> chi;
  for (const ExtIrrep& w : irreps.irreps) {
    ExtIrrepMatrices m = ext_irrep_matrices(mp, w);
    REQUIRE(verify_ext_irrep_matrices(mp, m));
    chi.push_back(module_character(mp, m));
    CHECK(chi.back()[0] == Cyclotomic(w.orbit_rep == 0 ? w.dim : 0));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t s = 0; s < ng; ++s) {
        for (std::size_t x = 0; x < nf; ++x) {
          Cyclotomic lhs;
          for (std::size_t g = 0; g < ng; ++g) {
            for (std::size_t h = 0; h < ng; ++h) {
              if (mp.gamma.multiply(g, h) != s) continue;
              lhs += chi[a][g * nf + mp.act_right(h, x)] * chi[b][h * nf + x];
            }
          }
          Cyclotomic rhs;
          for (std::size_t k = 0; k < n; ++k) {
            if (ring(a, b, k) != 0) rhs += Cyclotomic(static_cast<long>(ring(a, b, k))) * chi[k][s * nf + x];
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("exact factorizations") {
  PermGroup s5 = symmetric_group(5);
  MatchedPair mp = matched_pair_from_factorization(s5, parse_group_spec("C5", 5), parse_group_spec("S4", 5));
  CHECK(mp.f.order() == 5);
  CHECK(mp.gamma.order() == 24);
  check_actions_by_search(mp);

  CHECK(code_of([] {
    PermGroup s3 = symmetric_group(3);
    matched_pair_from_factorization(s3, s3, s3);
  }) == ErrorCode::NotExactFactorization);
  CHECK(code_of([] { matched_pair_from_factorization(symmetric_group(4), parse_group_spec("C4", 4), parse_group_spec("C3", 4)); }) ==
        ErrorCode::NotExactFactorization);

  for (const MatchedPair& p : {pair_k(5), pair_j(5), pair_b(5), pair_h(5), pair_l(5), pair_b_dual(5)}) check_actions_by_search(p);
}

TEST_CASE("S4 = C4 S3 moves (1,2,3) out of A3") {
  PermGroup s4 = symmetric_group(4);
  MatchedPair mp = matched_pair_from_factorization(s4, parse_group_spec("C4", 4), parse_group_spec("S3", 4));
  check_actions_by_search(mp);
  const std::size_t s = mp.gamma.require_index(Permutation::from_cycles(4, "(1,2,3)"));
  const std::size_t z = mp.f.require_index(Permutation::from_cycles(4, "(1,2,3,4)"));
  CHECK(mp.gamma.element(mp.act_left(s, z)).sign() == -1);
}

TEST_CASE("bowtie group recovers the ambient group") {
  for (const MatchedPair& mp : {pair_k(5), pair_j(5), pair_h(5), pair_b(5)}) {
    PermGroup bt = bowtie_group(mp);
    CHECK(bt.order() == mp.ambient.order());
    CHECK(find_isomorphism(bt, mp.ambient).has_value());
  }
}

TEST_CASE("parsed pairs") {
  MatchedPair k5 = parse_pair_spec("(A4,C5 in A5)");
  CHECK(k5.gamma.order() == 12);
  CHECK(k5.f.order() == 5);
  CHECK(split_type(k5) == split_type(pair_k(5)));
  CHECK(parse_pair_spec("B5*").f.order() == 60);
  CHECK(code_of([] { parse_pair_spec("X5"); }) == ErrorCode::ParseError);
}

TEST_CASE("types of the named pairs") {
  CHECK(split_type(pair_k(5)).to_string() == "(1,10; 5,2)");
  CHECK(split_type(pair_j(5)).to_string() == "(1,20; 5,4)");
  CHECK(split_type(pair_h(5)).to_string() == "(1,2; 2,1; 3,2; 4,2; 8,1)");
  CHECK(split_type(pair_l(5)).to_string() == "(1,3; 3,1; 4,3)");
  CHECK(split_type(pair_b(5)).to_string() == "(1,12; 2,27)");
  for (const MatchedPair& mp : {pair_k(5), pair_j(5), pair_h(5), pair_l(5), pair_b(5), pair_k(7)}) {
    SplitIrreps irreps = split_irreps(mp);
    long squares = 0;
    for (const ExtIrrep& w : irreps.irreps) squares += w.dim * w.dim;
    CHECK(squares == static_cast<long>(mp.ambient.order()));
    CHECK(irreps.type == split_type(mp));
  }
}

TEST_CASE("tensor products agree with the coproduct on explicit modules") {
  check_tensor_by_coproduct(matched_pair_from_factorization(symmetric_group(3), parse_group_spec("C3", 3), parse_group_spec("C2", 3)));
  check_tensor_by_coproduct(matched_pair_from_factorization(symmetric_group(3), parse_group_spec("C2", 3), parse_group_spec("C3", 3)));
  check_tensor_by_coproduct(matched_pair_from_factorization(symmetric_group(4), parse_group_spec("C4", 4), parse_group_spec("S3", 4)));
  check_tensor_by_coproduct(pair_k(5));
  check_tensor_by_coproduct(pair_l(5));
}

TEST_CASE("degenerate pairs give Rep F and the group ring of Gamma") {
  PermGroup s4 = symmetric_group(4);
  FusionRing only_f = split_fusion_ring(matched_pair_from_factorization(s4, s4, trivial_group(4)));
  CHECK(find_equivalence(only_f, rep_g_fusion_ring(character_table(s4))).has_value());
  FusionRing only_gamma = split_fusion_ring(matched_pair_from_factorization(s4, trivial_group(4), s4));
  CHECK(find_equivalence(only_gamma, group_ring(s4)).has_value());
}

TEST_CASE("K5 fusion rules") {
  FusionRing ring = split_fusion_ring(pair_k(5));
  validate(ring);
  FPDims dims = fp_dims(ring);
  std::vector<std::size_t> fives;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (dims.exact[i] == 5) fives.push_back(i);
  }
  REQUIRE(fives.size() == 2);
  InvertibleGroup inv = invertibles(ring);
  CHECK(inv.name == "D5");
  // every invertible fixes each five-dimensional simple or swaps the two
  for (std::size_t g : inv.basis) {
    for (std::size_t y : fives) {
      std::size_t images = 0;
      for (std::size_t z : fives) images += ring(g, y, z);
      CHECK(images == 1);
    }
  }
  // Y*Y* is the sum of the invertibles of order 5 or 1 plus copies of the fives
  for (std::size_t y : fives) {
    long invertible_part = 0;
    for (std::size_t g : inv.basis) invertible_part += ring(y, ring.dual(y), g);
    CHECK(invertible_part == 5);
  }
}

TEST_CASE("one-dimensional representations of the duals") {
  DualInvertibles j5 = dual_invertibles(pair_j(5));
  CHECK(j5.group.order() == 20);
  CHECK(j5.center_order == 1);
  CHECK(j5.name == "F20");
  DualInvertibles k5 = dual_invertibles(pair_k(5));
  CHECK(k5.group.order() == 10);
  CHECK(k5.name == "D5");
  DualInvertibles b5 = dual_invertibles(pair_b(5));
  CHECK(b5.group.order() == 12);
  CHECK(find_isomorphism(b5.group, parse_group_spec("Z2 x S3")).has_value());
  // the group has as many elements as the algebra has one-dimensional modules
  for (const MatchedPair& mp : {pair_j(5), pair_k(5), pair_h(5), pair_l(5), pair_b(5)}) {
    CHECK(dual_invertibles(mp).group.order() == invertibles(split_fusion_ring(mp)).order());
  }
}

TEST_CASE("swapped pairs") {
  MatchedPair k5 = pair_k(5);
  MatchedPair l5 = swapped(k5);
  check_actions_by_search(l5);
  CHECK(split_type(l5) == split_type(pair_l(5)));
  CHECK(swapped(l5).f == k5.f);
  // dual actions are the swapped actions transported by inversion
  for (std::size_t x = 0; x < k5.f.order(); ++x) {
    for (std::size_t s = 0; s < k5.gamma.order(); ++s) {
      const std::size_t si = k5.gamma.inverse(s), xi = k5.f.inverse(x);
      CHECK(k5.dual_left[x * k5.gamma.order() + s] == k5.f.inverse(k5.act_right(si, xi)));
      CHECK(k5.dual_right[x * k5.gamma.order() + s] == k5.gamma.inverse(k5.act_left(si, xi)));
    }
  }
}

TEST_CASE("equivariantization types") {
  FusionRing z1 = group_ring(trivial_group(1));
  CHECK(equivariantization_type(z1, std::vector<std::size_t>{0}, 2).to_string() == "(1,2)");

  PermGroup a5 = alternating_group(5);
  const Permutation t = Permutation::from_cycles(5, "(1,2)");
  auto action = conjugation_action(a5, t);
  CHECK(equivariantization_type(group_ring(a5), action, 2) == split_type(pair_b(5)));

  PermGroup s3 = symmetric_group(3);
  std::vector<std::size_t> not_auto(s3.order());
  std::iota(not_auto.begin(), not_auto.end(), 0);
  std::swap(not_auto[0], not_auto[1]);
  CHECK(code_of([&] { equivariantization_type(group_ring(s3), not_auto, 2); }) == ErrorCode::NotAutomorphism);
}
