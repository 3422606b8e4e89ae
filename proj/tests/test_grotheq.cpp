#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fusionlab/chartab.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/grotheq.hpp"

using namespace fusionlab;

namespace {

FusionRing rep(const char* spec) { return rep_g_fusion_ring(character_table(parse_group_spec(spec))); }

// Oracle: try every bijection fixing the unit.
bool brute_equivalent(const FusionRing& a, const FusionRing& b) {
  if (a.rank() != b.rank()) return false;
  const std::size_t n = a.rank();
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        for (std::size_t k = 0; ok && k < n; ++k) ok = a(i, j, k) == b(f[i], f[j], f[k]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return false;
}

FusionRing shuffled(const FusionRing& ring, std::mt19937& rng) {
  std::vector<std::size_t> perm(ring.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return relabeled(ring, perm);
}

}  // namespace

TEST_CASE("D4 and Q8 have equivalent representation rings") {
  FusionRing d4 = rep("D4"), q8 = rep("Q8");
  auto w = find_equivalence(d4, q8);
  REQUIRE(w.has_value());
  CHECK(is_witness(d4, q8, *w));
  CHECK(verify_properties(d4, q8, *w).all());
  CHECK(fingerprint(d4) == fingerprint(q8));
}

TEST_CASE("search agrees with exhaustive enumeration on small rings") {
  std::vector<FusionRing> rings;
  for (const char* spec : {"S3", "Z6", "D4", "Q8", "Z8", "Z2 x Z4", "Z2 x Z2 x Z2", "A4", "S4", "D5", "Q12", "D6"}) rings.push_back(rep(spec));
  for (const char* spec : {"S3", "Z6", "D4", "Q8", "Z8", "Z2 x Z4"}) rings.push_back(group_ring(parse_group_spec(spec)));
  std::mt19937 rng(20240607);
  std::size_t compared = 0;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    for (std::size_t j = i; j < rings.size(); ++j) {
      if (rings[i].rank() != rings[j].rank() || rings[i].rank() > 8) continue;
      FusionRing other = shuffled(rings[j], rng);
      CAPTURE(i);
      CAPTURE(j);
      const bool oracle = brute_equivalent(rings[i], other);
      auto w = find_equivalence(rings[i], other);
      CHECK(w.has_value() == oracle);
      if (w) CHECK(is_witness(rings[i], other, *w));
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("a relabeled copy is found and a corrupted witness is rejected") {
  std::mt19937 rng(7);
  FusionRing s5 = rep("S5");
  FusionRing copy = shuffled(s5, rng);
  auto w = find_equivalence(s5, copy);
  REQUIRE(w.has_value());
  CHECK(is_witness(s5, copy, *w));
  CHECK(verify_properties(s5, copy, *w).all());

  // images of a degree-4 and a degree-5 character exchanged
  EquivalenceWitness bad = *w;
  std::swap(bad[2], bad[4]);
  CHECK_FALSE(is_witness(s5, copy, bad));
  CHECK_FALSE(verify_properties(s5, copy, bad).all());
}

TEST_CASE("inequivalent rings") {
  CHECK_FALSE(find_equivalence(rep("S3"), rep("Z3")).has_value());
  CHECK_FALSE(find_equivalence(rep("Z4"), rep("Z2 x Z2")).has_value());
  CHECK_FALSE(find_equivalence(rep("D5"), rep("Z2 x Z5")).has_value());
  CHECK_FALSE(find_equivalence(group_ring(parse_group_spec("D4")), group_ring(parse_group_spec("Q8"))).has_value());
}

TEST_CASE("node budget") {
  // Group rings of Z2^4 have huge automorphism groups, but a single node is never enough.
  FusionRing a = group_ring(parse_group_spec("Z2 x Z2 x Z2 x Z2"));
  try {
    find_equivalence(a, a, 1);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
  }
}
