#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fusionlab/error.hpp"
#include "fusionlab/permcore.hpp"

using namespace fusionlab;

namespace {

Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

// Brute-force oracle: derived series by forming all commutators of pairs.
bool brute_solvable(const PermGroup& g) {
  std::vector<Permutation> current = g.elements();
  for (;;) {
    if (current.size() == 1) return true;
    std::vector<Permutation> comms;
    for (const auto& a : current) {
      for (const auto& b : current) comms.push_back(a.inverse() * b.inverse() * a * b);
    }
    PermGroup next = PermGroup::from_generators(g.degree(), comms);
    if (next.order() == current.size()) return false;
    current = next.elements();
  }
}

// Right action of a cyclic subgroup F on a complement subgroup by the
// unique decomposition s*x = f*t (f in F, t in the complement).
GroupAction complement_action(const PermGroup& ambient, const PermGroup& f, const PermGroup& gamma) {
  GroupAction act{f, gamma.order(), std::vector<std::size_t>(f.order() * gamma.order())};
  for (std::size_t xi = 0; xi < f.order(); ++xi) {
    for (std::size_t si = 0; si < gamma.order(); ++si) {
      Permutation prod = gamma.element(si) * f.element(xi);
      for (std::size_t yi = 0; yi < f.order(); ++yi) {
        Permutation t = f.element(yi).inverse() * prod;
        if (auto ti = gamma.index_of(t)) act.table[xi * gamma.order() + si] = *ti;
      }
    }
  }
  (void)ambient;
  return act;
}

}  // namespace

TEST_CASE("permutation basics and convention") {
  Permutation a = cyc(3, "(1,2)");
  Permutation b = cyc(3, "(1,2,3)");
  // (a*b)(x) = b(a(x))
  for (Point x = 0; x < 3; ++x) CHECK((a * b)(x) == b(a(x)));
  CHECK(b.order() == 3);
  CHECK(a.sign() == -1);
  CHECK(b.to_cycles() == "(1,2,3)");
  CHECK(cyc(5, "(123)(45)") == cyc(5, "(1,2,3)(4,5)"));
  CHECK(Permutation::identity(4).to_cycles() == "()");
  CHECK(b.pow(-1) == b.inverse());
  CHECK(b.pow(3).is_identity());
  CHECK_THROWS_AS(cyc(3, "(1,4)"), Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
}

TEST_CASE("closure from generators") {
  CHECK(PermGroup::from_generators(3, {cyc(3, "(12)"), cyc(3, "(123)")}).order() == 6);
  CHECK(PermGroup::from_generators(5, {cyc(5, "(12345)")}).order() == 5);
  PermGroup a5 = PermGroup::from_generators(5, {cyc(5, "(123)"), cyc(5, "(12345)")});
  CHECK(a5.order() == 60);
  for (const auto& g : a5.elements()) CHECK(g.sign() == 1);
  CHECK(a5.element(0).is_identity());
  CHECK(std::is_sorted(a5.elements().begin(), a5.elements().end()));
  CHECK_THROWS_AS(PermGroup::from_generators(6, {cyc(6, "(12)"), cyc(6, "(123456)")}, 100), Error);
  try {
    PermGroup::from_generators(6, {cyc(6, "(12)"), cyc(6, "(123456)")}, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureTooLarge);
  }
}

TEST_CASE("conjugacy classes against brute-force partition") {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D5", "Q8", "C5"}) {
    PermGroup g = parse_group_spec(spec);
    auto classes = conjugacy_classes(g);
    // Oracle: orbit of each element under conjugation by every element.
    std::set<std::set<std::size_t>> oracle;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::set<std::size_t> cls;
      for (const auto& h : g.elements()) cls.insert(*g.index_of(h.inverse() * g.element(x) * h));
      oracle.insert(cls);
    }
    std::set<std::set<std::size_t>> computed;
    std::size_t total = 0;
    for (const auto& c : classes) {
      computed.insert(std::set<std::size_t>(c.members.begin(), c.members.end()));
      CHECK(g.order() % c.size() == 0);
      CHECK(c.representative == g.element(c.members.front()));
      total += c.size();
    }
    CHECK(total == g.order());
    CHECK(computed == oracle);
    for (std::size_t i = 1; i < classes.size(); ++i) {
      CHECK(classes[i - 1].size() <= classes[i].size());
    }
  }
  auto s3 = conjugacy_classes(symmetric_group(3));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].size() == 1);
  CHECK(s3[1].size() == 2);
  CHECK(s3[2].size() == 3);
  CHECK(conjugacy_classes(cyclic_group(5)).size() == 5);
  CHECK(conjugacy_classes(symmetric_group(4)).size() == 5);
}

TEST_CASE("centralizers") {
  PermGroup a5 = alternating_group(5);
  PermGroup c = centralizer_in(a5, cyc(5, "(12)"));
  CHECK(c.order() == 6);
  CHECK_FALSE(c.is_abelian());
  CHECK(centralizer_in(symmetric_group(3), Permutation::identity(3)).order() == 6);
  CHECK(centralizer_in(alternating_group(6), cyc(6, "(12)")).order() == 24);
  CHECK(a5.order() % c.order() == 0);
}

TEST_CASE("orbits of matched-pair actions") {
  PermGroup a5 = alternating_group(5);
  PermGroup c5 = cyclic_group(5);
  PermGroup a4 = parse_group_spec("A4", 5);
  GroupAction act = complement_action(a5, c5, a4);
  act.validate();
  auto orbs = orbits(act);
  std::map<std::size_t, int> sizes;
  std::size_t covered = 0;
  for (const auto& o : orbs) {
    ++sizes[o.points.size()];
    CHECK(o.points.size() * o.stabilizer.order() == c5.order());
    covered += o.points.size();
  }
  CHECK(covered == 12);
  CHECK(sizes[1] == 2);
  CHECK(sizes[5] == 2);

  PermGroup s4 = parse_group_spec("S4", 5);
  auto orbs2 = orbits(complement_action(symmetric_group(5), c5, s4));
  std::map<std::size_t, int> sizes2;
  for (const auto& o : orbs2) ++sizes2[o.points.size()];
  CHECK(sizes2[1] == 4);
  CHECK(sizes2[5] == 4);

  GroupAction trivial{cyclic_group(3), 4, std::vector<std::size_t>(12)};
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t x = 0; x < 4; ++x) trivial.table[g * 4 + x] = x;
  }
  CHECK(orbits(trivial).size() == 4);
}

TEST_CASE("structure invariants") {
  auto s5 = structure_invariants(symmetric_group(5));
  CHECK(s5.center.order() == 1);
  CHECK(s5.abelianization_type == std::vector<std::size_t>{2});
  CHECK_FALSE(s5.is_solvable);
  auto c6 = structure_invariants(cyclic_group(6));
  CHECK(c6.center.order() == 6);
  CHECK(c6.is_solvable);
  CHECK(c6.is_nilpotent);
  CHECK(c6.abelianization_type == std::vector<std::size_t>{6});
  auto a4 = structure_invariants(alternating_group(4));
  CHECK(a4.abelianization_type == std::vector<std::size_t>{3});
  CHECK(a4.is_solvable);
  CHECK_FALSE(a4.is_nilpotent);
  auto q8 = structure_invariants(dicyclic_group(8));
  CHECK(q8.is_nilpotent);
  CHECK(q8.center.order() == 2);
  CHECK(q8.abelianization_type == std::vector<std::size_t>{2, 2});
  for (const char* spec : {"S3", "S4", "A4", "A5", "D4", "D6", "Q8", "C6", "D10", "S5"}) {
    PermGroup g = parse_group_spec(spec);
    CHECK(structure_invariants(g).is_solvable == brute_solvable(g));
  }
}

TEST_CASE("abelian invariants") {
  std::vector<std::size_t> inv{2, 4};
  PermGroup g = abelian_group(inv);
  CHECK(g.order() == 8);
  CHECK(abelian_invariants(element_order_profile(g)) == inv);
  std::vector<std::size_t> inv2{2, 6};
  CHECK(abelian_invariants(element_order_profile(abelian_group(inv2))) == inv2);
  CHECK(abelian_invariants(element_order_profile(cyclic_group(12))) == std::vector<std::size_t>{12});
  CHECK(abelian_invariants(element_order_profile(trivial_group())).empty());
}

TEST_CASE("isomorphism and names") {
  CHECK(find_isomorphism(dihedral_group(3), symmetric_group(3)).has_value());
  CHECK_FALSE(find_isomorphism(dihedral_group(4), dicyclic_group(8)).has_value());
  CHECK(group_name(dihedral_group(5)) == "D5");
  CHECK(group_name(dicyclic_group(8)) == "Q8");
  CHECK(group_name(cyclic_group(2)) == "Z2");
  CHECK(group_name(abelian_group(std::vector<std::size_t>{2, 2})) == "Z2 x Z2");
  CHECK(group_name(symmetric_group(4)) == "S4");
  auto map = find_isomorphism(dihedral_group(6), direct_product(cyclic_group(2), symmetric_group(3)));
  REQUIRE(map.has_value());
  PermGroup d6 = dihedral_group(6);
  PermGroup other = direct_product(cyclic_group(2), symmetric_group(3));
  for (std::size_t a = 0; a < 12; ++a) {
    for (std::size_t b = 0; b < 12; ++b) {
      CHECK((*map)[d6.multiply(a, b)] == other.multiply((*map)[a], (*map)[b]));
    }
  }
}

TEST_CASE("group specifications") {
  CHECK(parse_group_spec("S5").order() == 120);
  CHECK(parse_group_spec("A6").order() == 360);
  CHECK(parse_group_spec("C7").order() == 7);
  CHECK(parse_group_spec("Z4").order() == 4);
  CHECK(parse_group_spec("D4").order() == 8);
  CHECK(parse_group_spec("Q8").order() == 8);
  CHECK(parse_group_spec("[(1,2,3),(1,2)]").order() == 6);
  PermGroup s4 = parse_group_spec("S4", 5);
  CHECK(s4.degree() == 5);
  for (const auto& g : s4.elements()) CHECK(g(4) == 4);
  CHECK_THROWS_AS(parse_group_spec("X3"), Error);
  CHECK_THROWS_AS(parse_group_spec("S6", 5), Error);
}

TEST_CASE("cayley table constructor") {
  // Z3 by addition mod 3
  std::vector<std::size_t> table{0, 1, 2, 1, 2, 0, 2, 0, 1};
  PermGroup g = PermGroup::from_cayley_table(3, table);
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());
}
