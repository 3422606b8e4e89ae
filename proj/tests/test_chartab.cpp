#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fusionlab/chartab.hpp"
#include "fusionlab/error.hpp"

using namespace fusionlab;

namespace {

// Oracle: number of conjugacy classes by explicit conjugation.
std::size_t brute_class_count(const PermGroup& g) {
  std::set<std::vector<Permutation>> seen;
  for (const Permutation& x : g.elements()) {
    std::vector<Permutation> cls;
    for (const Permutation& h : g.elements()) cls.push_back(h.inverse() * x * h);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    seen.insert(cls);
  }
  return seen.size();
}

std::vector<Cyclotomic> row_of(const CharacterTable& t, std::size_t row) { return t.chars[row]; }

std::vector<Cyclotomic> class_function(const CharacterTable& t, const std::function<Cyclotomic(const Permutation&)>& f) {
  std::vector<Cyclotomic> v;
  for (const ConjugacyClass& c : t.classes) v.push_back(f(c.representative));
  return v;
}

bool has_row(const CharacterTable& t, const std::vector<Cyclotomic>& v) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (row_of(t, r) == v) return true;
  }
  return false;
}

long fixed_points(const Permutation& p) {
  long n = 0;
  for (Point x = 0; x < p.degree(); ++x) n += p(x) == x ? 1 : 0;
  return n;
}

// Oracle: N_ij^k = (1/|G|) sum_g chi_i(g) chi_j(g) conj chi_k(g), summed over elements.
int brute_multiplicity(const CharacterTable& t, std::size_t i, std::size_t j, std::size_t k) {
  Cyclotomic sum;
  for (std::size_t e = 0; e < t.group.order(); ++e) {
    const std::size_t c = t.class_of[e];
    sum += t.chars[i][c] * t.chars[j][c] * t.chars[k][c].conjugate();
  }
  sum /= Cyclotomic(static_cast<long>(t.group.order()));
  auto q = sum.rational_part();
  REQUIRE(q.has_value());
  REQUIRE(q->get_den() == 1);
  return static_cast<int>(q->get_num().get_si());
}

}  // namespace

TEST_CASE("tables of small groups against class counts and orthogonality") {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D4", "Q8", "D5", "Z6", "Q12", "S5"}) {
    CAPTURE(spec);
    PermGroup g = parse_group_spec(spec);
    CharacterTable t = character_table(g);
    CHECK(t.size() == brute_class_count(g));
    long squares = 0;
    for (long d : t.degrees) squares += d * d;
    CHECK(squares == static_cast<long>(g.order()));
    CHECK(t.degrees[0] == 1);
    for (const Cyclotomic& v : t.chars[0]) CHECK(v == Cyclotomic(1));
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        Cyclotomic sum;
        for (std::size_t e = 0; e < g.order(); ++e) sum += t.chars[i][t.class_of[e]] * t.chars[j][t.class_of[e]].conjugate();
        CHECK(sum == Cyclotomic(i == j ? static_cast<long>(g.order()) : 0));
      }
    }
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        Cyclotomic sum;
        for (std::size_t i = 0; i < t.size(); ++i) sum += t.chars[i][a] * t.chars[i][b].conjugate();
        CHECK(sum == Cyclotomic(a == b ? static_cast<long>(g.order() / t.classes[a].size()) : 0));
      }
    }
  }
}

TEST_CASE("known degree multisets") {
  auto sorted_degrees = [](const char* spec) {
    std::vector<long> d = character_table(parse_group_spec(spec)).degrees;
    std::sort(d.begin(), d.end());
    return d;
  };
  CHECK(sorted_degrees("S3") == std::vector<long>{1, 1, 2});
  CHECK(sorted_degrees("S4") == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees("A4") == std::vector<long>{1, 1, 1, 3});
  CHECK(sorted_degrees("A5") == std::vector<long>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees("S5") == std::vector<long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("sign and standard characters of symmetric groups") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    CharacterTable t = character_table(symmetric_group(n));
    CHECK(has_row(t, class_function(t, [](const Permutation& p) { return Cyclotomic(p.sign()); })));
    CHECK(has_row(t, class_function(t, [](const Permutation& p) { return Cyclotomic(fixed_points(p) - 1); })));
  }
}

TEST_CASE("A5 has golden-ratio values on 5-cycles") {
  CharacterTable t = character_table(alternating_group(5));
  const Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  const Cyclotomic phi = Cyclotomic(1) + z + z.galois(4);  // (1 + sqrt5)/2
  const Cyclotomic psi = Cyclotomic(1) - phi;               // (1 - sqrt5)/2
  CHECK(phi * phi == phi + Cyclotomic(1));
  const Permutation c5 = Permutation::from_cycles(5, "(1,2,3,4,5)");
  const Permutation c5sq = c5 * c5;
  std::multiset<std::string> on_c5;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.degrees[r] != 3) continue;
    const Cyclotomic a = t.value(r, c5), b = t.value(r, c5sq);
    CHECK(((a == phi && b == psi) || (a == psi && b == phi)));
    on_c5.insert(a.to_string());
  }
  CHECK(on_c5.size() == 2);
  CHECK(*on_c5.begin() != *on_c5.rbegin());
  CHECK(t.value(0, c5).is_integer());
}

TEST_CASE("Rep G fusion rings agree with element-sum multiplicities") {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D5", "Q8"}) {
    CAPTURE(spec);
    CharacterTable t = character_table(parse_group_spec(spec));
    FusionRing ring = rep_g_fusion_ring(t);
    validate(ring);
    FPDims dims = fp_dims(ring);
    REQUIRE(dims.integral);
    CHECK(dims.exact == t.degrees);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t k = 0; k < t.size(); ++k) CHECK(ring(i, j, k) == brute_multiplicity(t, i, j, k));
      }
    }
  }
}

TEST_CASE("S3 standard representation squared") {
  CharacterTable t = character_table(symmetric_group(3));
  FusionRing ring = rep_g_fusion_ring(t);
  std::size_t v = 0, sgn = 0;
  for (std::size_t r = 1; r < t.size(); ++r) (t.degrees[r] == 2 ? v : sgn) = r;
  CHECK(ring(v, v, 0) == 1);
  CHECK(ring(v, v, sgn) == 1);
  CHECK(ring(v, v, v) == 1);
  CHECK(type_signature(ring).to_string() == "(1,2; 2,1)");
  CHECK(type_signature(rep_g_fusion_ring(character_table(dihedral_group(5)))).to_string() == "(1,2; 2,2)");
}

TEST_CASE("inner products and their errors") {
  CharacterTable t = character_table(symmetric_group(4));
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(inner_product(t, t.chars[i], t.chars[i]) == Cyclotomic(1));
  std::vector<Cyclotomic> short_row(t.size() - 1, Cyclotomic(1));
  CHECK_THROWS_AS(inner_product(t, short_row, t.chars[0]), Error);
  try {
    inner_product(t, short_row, t.chars[0]);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("explicit irreducible representations") {
  for (const char* spec : {"S3", "S4", "A5", "Q8"}) {
    CAPTURE(spec);
    PermGroup g = parse_group_spec(spec);
    CharacterTable t = character_table(g);
    for (std::size_t row = 0; row < t.size(); ++row) {
      auto rho = irreducible_representation(t, row);
      REQUIRE(rho.size() == g.order());
      for (std::size_t e = 0; e < g.order(); ++e) CHECK(matrix_trace(rho[e]) == t.chars[row][t.class_of[e]]);
      for (const Permutation& gen : g.generators()) {
        const std::size_t y = g.require_index(gen);
        for (std::size_t x = 0; x < g.order(); ++x) CHECK(matrix_multiply(rho[x], rho[y]) == rho[g.multiply(x, y)]);
      }
    }
  }
}
