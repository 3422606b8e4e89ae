#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "fusionlab/chartab.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/fusering.hpp"

using namespace fusionlab;

namespace {

FusionRing rep(const char* spec) { return rep_g_fusion_ring(character_table(parse_group_spec(spec))); }

FusionRing fibonacci() { return FusionRing({"1", "t"}, {0, 1}, {1, 0, 0, 1, 0, 1, 1, 1}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::size_t index_with_dim(const FusionRing& ring, long d, std::size_t skip = 0) {
  FPDims dims = fp_dims(ring);
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (dims.exact[i] == d && skip-- == 0) return i;
  }
  FAIL("no basis element of the requested dimension");
  return 0;
}

// Oracle: closure of a seed under products and duals by fixed-point iteration.
std::set<std::size_t> brute_closure(const FusionRing& ring, std::set<std::size_t> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::set<std::size_t> next = s;
    for (std::size_t a : s) {
      next.insert(ring.dual(a));
      for (std::size_t b : s) {
        for (std::size_t k = 0; k < ring.rank(); ++k) {
          if (ring(a, b, k) > 0) next.insert(k);
        }
      }
    }
    grew = next.size() != s.size();
    s = std::move(next);
  }
  return s;
}

// Oracle: support of sum_x x x*.
std::set<std::size_t> brute_adjoint(const FusionRing& ring, const std::vector<std::size_t>& part) {
  std::set<std::size_t> seed;
  for (std::size_t x : part) {
    for (std::size_t k = 0; k < ring.rank(); ++k) {
      if (ring(x, ring.dual(x), k) > 0) seed.insert(k);
    }
  }
  return brute_closure(ring, seed);
}

}  // namespace

TEST_CASE("axiom violations are reported") {
  validate(fibonacci());
  // unit law broken: 1*t = 1
  FusionRing bad_unit({"1", "t"}, {0, 1}, {1, 0, 1, 0, 0, 1, 1, 1});
  CHECK(code_of([&] { validate(bad_unit); }) == ErrorCode::AxiomViolation);
  // t*t lacks the unit although t is self-dual
  FusionRing bad_dual({"1", "t"}, {0, 1}, {1, 0, 0, 1, 0, 1, 0, 2});
  CHECK(code_of([&] { validate(bad_dual); }) == ErrorCode::AxiomViolation);
  // negative coefficient
  FusionRing negative({"1", "t"}, {0, 1}, {1, 0, 0, 1, 0, 1, 1, -1});
  CHECK(code_of([&] { validate(negative); }) == ErrorCode::AxiomViolation);
  // Rep S3 with V*sgn altered to 2V: Frobenius reciprocity fails
  FusionRing s3 = rep("S3");
  std::vector<int> t = s3.tensor();
  const std::size_t v = index_with_dim(s3, 2), sgn = index_with_dim(s3, 1, 1), n = s3.rank();
  t[(v * n + sgn) * n + v] = 2;
  FusionRing broken(s3.labels(), s3.dual(), t);
  CHECK(code_of([&] { validate(broken); }) == ErrorCode::AxiomViolation);
}

TEST_CASE("Frobenius-Perron dimensions") {
  FPDims fib = fp_dims(fibonacci());
  CHECK_FALSE(fib.integral);
  CHECK(fib.numeric[1] == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(fib.global == doctest::Approx((5 + std::sqrt(5.0)) / 2));
  CHECK(code_of([&] { type_signature(fibonacci()); }) == ErrorCode::Unsupported);

  FPDims s4 = fp_dims(rep("S4"));
  REQUIRE(s4.integral);
  CHECK(s4.global_exact == 24);
  CHECK(type_signature(s4).to_string() == "(1,2; 2,1; 3,2)");

  FPDims z = fp_dims(group_ring(parse_group_spec("S4")));
  CHECK(z.exact == std::vector<long>(24, 1));
}

TEST_CASE("type signatures parse back") {
  for (const char* text : {"(1,10; 5,2)", "(1,2; 2,1)", "(1,48; 2,168)"}) CHECK(TypeSignature::parse(text).to_string() == text);
}

TEST_CASE("invertibles and stabilizers") {
  FusionRing s3 = rep("S3");
  InvertibleGroup inv = invertibles(s3);
  CHECK(inv.order() == 2);
  const std::size_t v = index_with_dim(s3, 2), sgn = index_with_dim(s3, 1, 1);
  CHECK(invertible_stabilizer(s3, v) == std::vector<std::size_t>{0, sgn});
  CHECK(invertible_stabilizer(s3, sgn) == std::vector<std::size_t>{0});

  CHECK(invertibles(group_ring(symmetric_group(3))).name == "S3");
  CHECK(invertibles(rep("Q8")).name == "Z2 x Z2");
  CHECK(invertibles(rep("A5")).order() == 1);
}

TEST_CASE("generated subrings match brute closure") {
  for (const char* spec : {"S4", "D4", "A5", "S5"}) {
    CAPTURE(spec);
    FusionRing ring = rep(spec);
    for (std::size_t x = 0; x < ring.rank(); ++x) {
      const std::vector<std::size_t> seed{x};
      std::set<std::size_t> oracle = brute_closure(ring, {x});
      std::vector<std::size_t> got = subring_generated(ring, seed);
      CHECK(got == std::vector<std::size_t>(oracle.begin(), oracle.end()));
    }
  }
  FusionRing s4 = rep("S4");
  const std::vector<std::size_t> sgn{index_with_dim(s4, 1, 1)}, two{index_with_dim(s4, 2)};
  CHECK(subring_generated(s4, sgn).size() == 2);
  CHECK(subring_generated(s4, two).size() == 3);
}

TEST_CASE("adjoint series and nilpotency") {
  for (const char* spec : {"S3", "S4", "D4", "Q8", "A5", "D5"}) {
    CAPTURE(spec);
    FusionRing ring = rep(spec);
    AdjointSeries series = adjoint_series(ring);
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
      std::set<std::size_t> oracle = brute_adjoint(ring, series.chain[i]);
      CHECK(series.chain[i + 1] == std::vector<std::size_t>(oracle.begin(), oracle.end()));
    }
    CHECK(series.reaches_unit == is_nilpotent(ring));
  }
  CHECK(is_nilpotent(rep("D4")));
  CHECK(is_nilpotent(rep("Q8")));
  CHECK_FALSE(is_nilpotent(rep("S3")));
  CHECK(is_nilpotent(group_ring(symmetric_group(3))));
}

TEST_CASE("universal grading") {
  GradingDecomposition q8 = universal_grading(rep("Q8"));
  CHECK(q8.order() == 2);
  CHECK(q8.blocks[0].size() == 4);
  CHECK(universal_grading(rep("S3")).order() == 1);
  CHECK(universal_grading(rep("A5")).order() == 1);
  GradingDecomposition gs3 = universal_grading(group_ring(symmetric_group(3)));
  CHECK(gs3.order() == 6);
  CHECK(group_name(gs3.group) == "S3");

  // Oracle: a grading is sound when every product lies in the product block.
  for (const char* spec : {"Q8", "D4", "S4", "Z6"}) {
    CAPTURE(spec);
    FusionRing ring = rep(spec);
    GradingDecomposition g = universal_grading(ring);
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      for (std::size_t j = 0; j < ring.rank(); ++j) {
        for (std::size_t k : ring.support(i, j)) CHECK(g.block_of[k] == g.group_table[g.block_of[i] * n + g.block_of[j]]);
      }
    }
  }
  // Rep of an abelian group: grading group is the group itself.
  CHECK(universal_grading(rep("Z6")).order() == 6);
}

TEST_CASE("cyclic nilpotency") {
  CHECK(is_cyclically_nilpotent(group_ring(symmetric_group(3))));
  CHECK(is_cyclically_nilpotent(rep("D4")));
  CHECK(is_cyclically_nilpotent(rep("Z6")));
  CHECK_FALSE(is_cyclically_nilpotent(rep("S5")));
  CHECK_FALSE(is_cyclically_nilpotent(rep("A5")));
}

TEST_CASE("relabeling and restriction") {
  FusionRing s4 = rep("S4");
  const std::vector<std::size_t> perm{0, 4, 3, 2, 1};
  FusionRing r = relabeled(s4, perm);
  validate(r);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      for (std::size_t k = 0; k < 5; ++k) CHECK(r(perm[i], perm[j], perm[k]) == s4(i, j, k));
    }
  }
  CHECK(type_signature(r) == type_signature(s4));
  CHECK(is_ring_automorphism(s4, std::vector<std::size_t>{0, 1, 2, 3, 4}));

  const std::vector<std::size_t> two{index_with_dim(s4, 2)};
  const std::vector<std::size_t> sub = subring_generated(s4, two);
  FusionRing s3_inside = restricted(s4, sub);
  validate(s3_inside);
  CHECK(type_signature(s3_inside).to_string() == "(1,2; 2,1)");
}
