#include <doctest.h>

#include <numeric>
#include <random>

#include "fusionlab/bicross.hpp"
#include "fusionlab/verdict.hpp"

using namespace fusionlab;

namespace {

FusionRing rep(const std::string& spec) { return rep_g_fusion_ring(character_table(parse_group_spec(spec))); }

std::string fired_rule(const SolvabilityVerdict& v) {
  for (const RuleEvaluation& r : v.trace) {
    if (r.fired) return r.rule;
  }
  return "";
}

FusionRing shuffled(const FusionRing& ring, unsigned seed) {
  std::vector<std::size_t> perm(ring.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return relabeled(ring, perm);
}

}  // namespace

TEST_CASE("named rings") {
  struct Case {
    FusionRing ring;
    Verdict verdict;
    const char* rule;
  };
  const std::vector<Case> cases = {
      {rep("S5"), Verdict::NotSolvable, "R5"},
      {rep("A5"), Verdict::NotSolvable, "R2"},
      {split_fusion_ring(pair_l(5)), Verdict::NotSolvable, "R6"},
      {split_fusion_ring(pair_k(5)), Verdict::NotSolvable, "R7"},
      {split_fusion_ring(pair_j(5)), Verdict::NotSolvable, "R7"},
      {split_fusion_ring(pair_h(5)), Verdict::NotSolvable, "R7"},
      {split_fusion_ring(pair_b(5)), Verdict::NotSolvable, "R7"},
      {split_fusion_ring(pair_b_dual(5)), Verdict::NotSolvable, "R5"},
      {group_ring(trivial_group()), Verdict::Solvable, "R1"},
      {group_ring(symmetric_group(4)), Verdict::Solvable, "R3"},
      {group_ring(alternating_group(5)), Verdict::NotSolvable, "R8"},
      {rep("D4"), Verdict::Solvable, "R3"},
  };
  for (const Case& c : cases) {
    SolvabilityVerdict v = solvability_verdict(c.ring);
    CAPTURE(c.rule);
    CHECK(v.verdict == c.verdict);
    CHECK(fired_rule(v) == c.rule);
    CHECK(v.trace.back().fired);
    for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) CHECK_FALSE(v.trace[i].fired);
  }
  CHECK(solvability_verdict(split_fusion_ring(pair_k(5))).matched == "K5");
}

TEST_CASE("dihedral representation rings are solvable") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(solvability_verdict(rep("D" + std::to_string(n))).verdict == Verdict::Solvable);
  }
}

TEST_CASE("verdicts do not depend on labels") {
  for (const FusionRing& ring : {rep("S5"), rep("A5"), rep("S4"), split_fusion_ring(pair_k(5)), split_fusion_ring(pair_l(5))}) {
    SolvabilityVerdict a = solvability_verdict(ring);
    for (unsigned seed : {1u, 2u, 3u}) {
      SolvabilityVerdict b = solvability_verdict(shuffled(ring, seed));
      CHECK(a.verdict == b.verdict);
      CHECK(fired_rule(a) == fired_rule(b));
      CHECK(a.matched == b.matched);
    }
  }
}

TEST_CASE("catalog rings are built only when the type matches") {
  int built = 0;
  std::vector<CatalogEntry> catalog;
  catalog.emplace_back("never", [] { return TypeSignature::parse("(1,7)"); }, [&] {
    ++built;
    return group_ring(cyclic_group(7));
  });
  catalog.emplace_back("k5", [] { return split_type(pair_k(5)); }, [&] {
    ++built;
    return split_fusion_ring(pair_k(5));
  });
  SolvabilityVerdict v = solvability_verdict(shuffled(split_fusion_ring(pair_k(5)), 5), catalog);
  CHECK(v.verdict == Verdict::NotSolvable);
  CHECK(v.matched == "k5");
  CHECK(built == 1);
  solvability_verdict(split_fusion_ring(pair_k(5)), catalog);
  CHECK(built == 1);

  // An empty catalog leaves K5 undecided.
  SolvabilityVerdict open = solvability_verdict(split_fusion_ring(pair_k(5)), {});
  CHECK(open.verdict == Verdict::Unknown);
  CHECK(open.trace.size() == 8);
  CHECK(verdict_name(open.verdict) == "UNKNOWN");
}
