#include "fusionlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fusionlab/bicross.hpp"
#include "fusionlab/chartab.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/moddata.hpp"
#include "fusionlab/verdict.hpp"

namespace fusionlab {

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<long> dimension_set(const FusionRing& ring) {
  FPDims d = fp_dims(ring);
  return std::set<long>(d.exact.begin(), d.exact.end());
}

// Rings built along the way, re-validated by the property check.
struct Registry {
  std::deque<std::pair<std::string, FusionRing>> rings;
  const FusionRing& add(std::string name, FusionRing ring) {
    rings.emplace_back(std::move(name), std::move(ring));
    return rings.back().second;
  }
};

FusionRing rep_ring(std::string_view spec) { return rep_g_fusion_ring(character_table(parse_group_spec(spec))); }

void k5_rules(Check& c, Registry& reg) {
  auto t0 = std::chrono::steady_clock::now();
  MatchedPair mp = parse_pair_spec("(A4,C5 in A5)");
  SplitIrreps irreps = split_irreps(mp);
  const FusionRing& ring = reg.add("K5", split_fusion_ring(mp, irreps));
  c.expect(irreps.type.to_string() == "(1,10; 5,2)", "type " + irreps.type.to_string());
  InvertibleGroup inv = invertibles(ring);
  c.expect(find_isomorphism(inv.group, dihedral_group(5)).has_value(), "invertibles " + inv.name + " not D5");
  FPDims dims = fp_dims(ring);
  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (dims.exact[i] == 5) big.push_back(i);
  }
  c.expect(big.size() == 2, "two simples of dimension 5");
  if (big.size() != 2) return;
  const std::size_t y = big[0], y2 = big[1];
  // R is the subgroup of order 5: the invertibles that are not involutions.
  std::size_t involutions = 0;
  std::vector<bool> in_r(ring.rank(), false);
  for (std::size_t g : inv.basis) {
    if (g == 0 || ring(g, g, 0) != 1) {
      in_r[g] = true;
      continue;
    }
    ++involutions;
    c.expect(ring.support(g, y) == std::vector<std::size_t>{y2} && ring(g, y, y2) == 1, "g Y = Y' for " + ring.labels()[g]);
    c.expect(ring.support(y, g) == std::vector<std::size_t>{y2} && ring(y, g, y2) == 1, "Y g = Y' for " + ring.labels()[g]);
    c.expect(ring.support(g, y2) == std::vector<std::size_t>{y} && ring(g, y2, y) == 1, "g Y' = Y for " + ring.labels()[g]);
  }
  c.expect(involutions == 5, "five invertibles of order 2");
  for (std::size_t a : {y, y2}) {
    for (std::size_t k = 0; k < ring.rank(); ++k) {
      int expected = dims.exact[k] == 1 ? (in_r[k] ? 1 : 0) : 2;
      c.expect(ring(a, a, k) == expected, "coefficient of " + ring.labels()[k] + " in " + ring.labels()[a] + "^2");
    }
  }
  const double secs = elapsed(t0);
  c.expect(secs < 10, "time limit 10 s");
  c.note("type " + irreps.type.to_string() + ", invertibles " + inv.name + ", Y.Y = sum R + 2Y + 2Y' = Y'.Y'");
}

void types(Check& c, Registry& reg) {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"H5", "(1,2; 2,1; 3,2; 4,2; 8,1)"}, {"L5", "(1,3; 3,1; 4,3)"}, {"B5", "(1,12; 2,27)"}};
  for (const auto& [name, type] : expected) {
    MatchedPair mp = parse_pair_spec(name);
    SplitIrreps irreps = split_irreps(mp);
    const FusionRing& ring = reg.add(name, split_fusion_ring(mp, irreps));
    c.expect(irreps.type.to_string() == type, name + " type " + irreps.type.to_string());
    c.expect(type_signature(ring).to_string() == type, name + " ring type " + type_signature(ring).to_string());
    c.note(name + " " + irreps.type.to_string());
  }
  auto t0 = std::chrono::steady_clock::now();
  TypeSignature b6 = split_type(pair_b(6));
  c.expect(b6.to_string() == "(1,48; 2,168)", "B6 type " + b6.to_string());
  c.expect(elapsed(t0) < 600, "B6 time limit");
  c.note("B6 " + b6.to_string());
}

void trivial_centers(Check& c, Registry& reg) {
  for (const auto& [name, order] : std::vector<std::pair<std::string, std::size_t>>{{"J5", 20}, {"K5", 10}}) {
    MatchedPair mp = parse_pair_spec(name);
    const FusionRing& ring = reg.add(name, split_fusion_ring(mp));
    c.expect(dimension_set(ring) == std::set<long>{1, 5}, "cd(" + name + ") = {1,5}");
    DualInvertibles d = dual_invertibles(mp);
    c.expect(d.group.order() == order, name + " dual invertibles order " + std::to_string(d.group.order()));
    c.expect(d.center_order == 1, name + " dual invertibles center order " + std::to_string(d.center_order));
    c.expect(invertibles(ring).order() == order, name + " invertible count agrees");
    c.note(name + ": " + d.name + ", |Z| = " + std::to_string(d.center_order));
  }
}

void j5_grading(Check& c, Registry& reg, std::uint64_t budget) {
  auto t0 = std::chrono::steady_clock::now();
  const FusionRing& j5 = reg.add("J5 (grading)", split_fusion_ring(pair_j(5)));
  const FusionRing& k5 = reg.add("K5 (grading)", split_fusion_ring(pair_k(5)));
  GradingDecomposition grading = universal_grading(j5);
  auto components = cyclic_quotient_components(j5, grading, 2);
  c.expect(!components.empty(), "J5 has a Z2 quotient grading");
  bool found = false;
  for (const auto& comp : components) {
    FusionRing neutral = restricted(j5, comp);
    validate(neutral);
    if (auto w = find_equivalence(neutral, k5, budget)) {
      found = is_witness(neutral, k5, *w);
      if (found) break;
    }
  }
  c.expect(found, "neutral component Grothendieck equivalent to K5");
  c.expect(elapsed(t0) < 60, "time limit 60 s");
  c.note("grading group order " + std::to_string(grading.order()) + ", " + std::to_string(components.size()) + " Z2 quotient(s)");
}

void verdicts(Check& c, std::uint64_t budget) {
  auto expect_verdict = [&](const std::string& name, const FusionRing& ring, Verdict v, const std::string& rule) {
    SolvabilityVerdict s = solvability_verdict(ring, default_catalog(), budget);
    const std::string fired = s.trace.empty() ? "none" : s.trace.back().rule;
    c.expect(!s.trace.empty() && s.verdict == v && (rule.empty() || fired == rule),
             name + " gave " + verdict_name(s.verdict) + " via " + fired);
  };
  expect_verdict("Rep S5", rep_ring("S5"), Verdict::NotSolvable, "R5");
  for (std::size_t n = 3; n <= 12; ++n) {
    expect_verdict("Rep D" + std::to_string(n), rep_g_fusion_ring(character_table(dihedral_group(n))), Verdict::Solvable, "");
  }
  expect_verdict("Rep A5", rep_ring("A5"), Verdict::NotSolvable, "R2");
  expect_verdict("L5", split_fusion_ring(pair_l(5)), Verdict::NotSolvable, "R6");
  for (const char* name : {"J5", "K5", "H5", "B5"}) {
    expect_verdict(name, split_fusion_ring(parse_pair_spec(name)), Verdict::NotSolvable, "R7");
  }
  c.note("Rep S5, Rep A5, L5, J5, K5, H5, B5 not solvable; Rep D3..D12 solvable");
}

void doubles(Check& c, Registry& reg) {
  for (const char* spec : {"Z2", "Z4", "S3", "S4", "A4", "D4", "Q8", "A5"}) {
    const std::string name = spec;
    PermGroup g = parse_group_spec(spec);
    ModularData md = double_modular_data(g);
    const std::size_t n = md.rank();
    bool symmetric = true, row0 = true;
    for (std::size_t x = 0; x < n; ++x) {
      row0 = row0 && md.s[0][x] == Cyclotomic(md.double_labels[x].dim);
      for (std::size_t y = 0; y < n; ++y) symmetric = symmetric && md.s[x][y] == md.s[y][x];
    }
    c.expect(symmetric, name + ": S symmetric");
    c.expect(row0, name + ": S row 0 = dims");
    const FusionRing& ring = reg.add("D(" + name + ")", verlinde_fusion(md));
    const long order = static_cast<long>(g.order());
    c.expect(md.global_dim() == Cyclotomic(order * order), name + ": global dim |G|^2");
    StructureInvariants inv = structure_invariants(g);
    PermGroup expected = direct_product(abelian_group(inv.abelianization_type), inv.center);
    c.expect(find_isomorphism(invertibles(ring).group, expected).has_value(), name + ": invertibles G/[G,G] x Z(G)");
    c.expect(std::abs(central_charge(md) - std::complex<double>(1, 0)) < 1e-9, name + ": central charge 1");
  }
  c.note("8 doubles: S symmetric, dims, Verlinde integral, |G|^2, invertibles, central charge");
}

void tannakian(Check& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::string name = "S" + std::to_string(n);
    ModularData md = double_modular_data(symmetric_group(n));
    auto pt = pointed_part(md);
    c.expect(pt.size() == 2, name + ": pointed part of order 2");
    if (pt.size() != 2) continue;
    const std::size_t u = pt[1];
    c.expect(md.s[u][u] == Cyclotomic(1), name + ": S entry 1");
    c.expect(md.t[u] == Cyclotomic(1), name + ": twist 1");
    c.expect(is_tannakian_subset(md, pt) == SymmetryKind::Tannakian, name + ": Tannakian");
  }
  c.note("pointed parts of D(S3), D(S4), D(S5) Tannakian");
}

void character_tables(Check& c) {
  const std::vector<std::pair<std::string, std::vector<long>>> known = {
      {"S3", {1, 1, 2}}, {"S4", {1, 1, 2, 3, 3}}, {"A4", {1, 1, 1, 3}}, {"A5", {1, 3, 3, 4, 5}}};
  for (const auto& [spec, degrees] : known) {
    PermGroup g = parse_group_spec(spec);
    CharacterTable t = character_table(g);
    std::vector<long> got = t.degrees;
    std::sort(got.begin(), got.end());
    c.expect(got == degrees, spec + ": degree multiset");
    const std::size_t k = t.size();
    // Row orthogonality summed over elements, column orthogonality over characters.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic sum;
        for (std::size_t e = 0; e < g.order(); ++e) sum += t.chars[i][t.class_of[e]] * t.chars[j][t.class_of[e]].conjugate();
        c.expect(sum == Cyclotomic(i == j ? static_cast<long>(g.order()) : 0), spec + ": row orthogonality");
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        Cyclotomic sum;
        for (std::size_t i = 0; i < k; ++i) sum += t.chars[i][a] * t.chars[i][b].conjugate();
        long cent = a == b ? static_cast<long>(g.order() / t.classes[a].size()) : 0;
        c.expect(sum == Cyclotomic(cent), spec + ": column orthogonality");
      }
    }
    if (spec == "A5") {
      const Cyclotomic golden = Cyclotomic(1) + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
      const Cyclotomic other = Cyclotomic(1) - golden;
      bool has_golden = false, has_other = false;
      for (const auto& row : t.chars) {
        for (const Cyclotomic& v : row) {
          has_golden = has_golden || v == golden;
          has_other = has_other || v == other;
        }
      }
      c.expect(has_golden && has_other, "A5: values (1 + sqrt5)/2 and (1 - sqrt5)/2 present");
    }
  }
  c.note("S3, S4, A4, A5 degrees and both orthogonality relations; A5 golden-ratio values");
}

bool brute_force_equivalent(const FusionRing& a, const FusionRing& b) {
  const std::size_t n = a.rank();
  if (b.rank() != n) return false;
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) ok = a(i, j, k) == b(w[i], w[j], w[k]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(w.begin() + 1, w.end()));
  return false;
}

void equivalence(Check& c, Registry& reg, std::uint64_t budget) {
  const FusionRing& d4 = reg.add("Rep D4", rep_ring("D4"));
  const FusionRing& q8 = reg.add("Rep Q8", rep_ring("Q8"));
  auto w = find_equivalence(d4, q8, budget);
  c.expect(w.has_value(), "Rep D4 ~ Rep Q8 witness");
  if (w) c.expect(verify_properties(d4, q8, *w).all(), "witness properties");

  std::vector<std::pair<std::string, FusionRing>> small;
  for (const char* spec : {"S3", "D4", "Q8", "A4", "D5", "S4", "Z3", "D6", "Q12", "A5", "D7", "Z2 x Z2", "Z4", "D8", "Q16"}) {
    small.emplace_back("Rep " + std::string(spec), rep_ring(spec));
  }
  for (const char* spec : {"Z4", "Z2 x Z2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2 x Z4", "Z2 x Z2 x Z2", "D4", "Q8"}) {
    small.emplace_back("Z[" + std::string(spec) + "]", group_ring(parse_group_spec(spec)));
  }
  std::size_t compared = 0, positives = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const auto& [na, a] = small[i];
      const auto& [nb, b] = small[j];
      if (a.rank() != b.rank() || a.rank() > 8) continue;
      ++compared;
      const bool search = find_equivalence(a, b, budget).has_value();
      const bool brute = brute_force_equivalent(a, b);
      positives += search ? 1 : 0;
      c.expect(search == brute, na + " vs " + nb + ": search " + (search ? "found" : "none") + ", enumeration " + (brute ? "found" : "none"));
    }
  }
  for (auto& [name, ring] : small) reg.add(name, std::move(ring));
  c.note("D4/Q8 witness verified; " + std::to_string(compared) + " pairs agree with enumeration (" + std::to_string(positives) + " equivalent)");
}

void equivariantization(Check& c, Registry& reg) {
  for (const auto& [n, type] : std::vector<std::pair<std::size_t, std::string>>{{5, "(1,12; 2,27)"}, {6, "(1,48; 2,168)"}}) {
    PermGroup a = alternating_group(n);
    const FusionRing& ring = reg.add("Z[A" + std::to_string(n) + "]", group_ring(a));
    auto action = conjugation_action(a, Permutation::from_cycles(n, "(1,2)"));
    TypeSignature eq = equivariantization_type(ring, action, 2);
    TypeSignature bn = split_type(pair_b(n));
    c.expect(eq.to_string() == type, "A" + std::to_string(n) + " equivariantization " + eq.to_string());
    c.expect(eq == bn, "A" + std::to_string(n) + " agrees with B" + std::to_string(n));
  }
  c.note("Z2-equivariantizations of A5, A6 group rings match B5, B6");
}

void property_suites(Check& c, const Registry& reg) {
  // Based-ring axioms and grading soundness on every ring built above.
  for (const auto& [name, ring] : reg.rings) {
    try {
      validate(ring);
    } catch (const Error& e) {
      c.expect(false, name + ": " + e.what());
      continue;
    }
    GradingDecomposition g = universal_grading(ring);
    bool sound = true;
    for (std::size_t i = 0; i < ring.rank() && sound; ++i) {
      for (std::size_t j = 0; j < ring.rank() && sound; ++j) {
        const std::size_t target = g.group_table[g.block_of[i] * g.order() + g.block_of[j]];
        for (std::size_t k : ring.support(i, j)) sound = sound && g.block_of[k] == target;
      }
    }
    c.expect(sound, name + ": grading soundness");
  }
  // Field axioms on a sample of cyclotomic numbers.
  std::vector<Cyclotomic> sample = {Cyclotomic(0),
                                    Cyclotomic(1),
                                    Cyclotomic(Rational(-1, 2)),
                                    Cyclotomic::root_of_unity(3, 1),
                                    Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4),
                                    Cyclotomic::root_of_unity(8, 1) + Cyclotomic(Rational(1, 3)),
                                    Cyclotomic::root_of_unity(12, 5) - Cyclotomic(2),
                                    Cyclotomic::root_of_unity(7, 3) * Cyclotomic(Rational(5, 4))};
  for (const Cyclotomic& a : sample) {
    if (!a.is_zero()) c.expect(a * a.inverse() == Cyclotomic(1), "inverse of " + a.to_string());
    c.expect(a.conjugate().conjugate() == a, "conjugation is an involution");
    for (const Cyclotomic& b : sample) {
      c.expect(a + b == b + a && a * b == b * a, "commutativity");
      c.expect((a * b).conjugate() == a.conjugate() * b.conjugate(), "conjugation is multiplicative");
      for (const Cyclotomic& d : sample) {
        c.expect((a + b) + d == a + (b + d), "additive associativity");
        c.expect((a * b) * d == a * (b * d), "multiplicative associativity");
        c.expect(a * (b + d) == a * b + a * d, "distributivity");
      }
    }
  }
  // Orbit-stabilizer on the pair actions and on conjugation.
  for (const char* name : {"K5", "J5", "H5", "L5", "B5"}) {
    MatchedPair mp = parse_pair_spec(name);
    for (const Orbit& o : orbits(mp.gamma_action())) {
      c.expect(o.points.size() * o.stabilizer.order() == mp.f.order(), std::string(name) + ": orbit-stabilizer");
    }
  }
  for (const char* spec : {"S4", "A5", "D6", "Q8"}) {
    PermGroup g = parse_group_spec(spec);
    std::size_t total = 0;
    for (const ConjugacyClass& cl : conjugacy_classes(g)) {
      c.expect(cl.size() * centralizer_in(g, cl.representative).order() == g.order(), std::string(spec) + ": class-centralizer");
      total += cl.size();
    }
    c.expect(total == g.order(), std::string(spec) + ": classes partition G");
  }
  // Orthogonality through inner products.
  for (const char* spec : {"S5", "D6", "Q8", "A4"}) {
    CharacterTable t = character_table(parse_group_spec(spec));
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        c.expect(inner_product(t, t.chars[i], t.chars[j]) == Cyclotomic(i == j ? 1 : 0), std::string(spec) + ": orthonormality");
      }
    }
  }
  c.note(std::to_string(reg.rings.size()) + " rings validated; cyclotomic field axioms; orbit-stabilizer; orthonormality");
}

}  // namespace

std::vector<CriterionResult> run_reproduction_suite(std::uint64_t node_budget,
                                                    const std::function<void(const CriterionResult&)>& on_result) {
  Registry reg;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> checks = {
      {"K5 type, invertibles and fusion rules", [&](Check& c) { k5_rules(c, reg); }},
      {"types of H5, L5, B5, B6", [&](Check& c) { types(c, reg); }},
      {"J5, K5 character degrees and dual invertibles", [&](Check& c) { trivial_centers(c, reg); }},
      {"J5 Z2 grading with neutral part K5", [&](Check& c) { j5_grading(c, reg, node_budget); }},
      {"solvability verdicts", [&](Check& c) { verdicts(c, node_budget); }},
      {"Drinfeld double modular data", [&](Check& c) { doubles(c, reg); }},
      {"Tannakian pointed parts of D(S_n)", [&](Check& c) { tannakian(c); }},
      {"character tables", [&](Check& c) { character_tables(c); }},
      {"Grothendieck equivalence search", [&](Check& c) { equivalence(c, reg, node_budget); }},
      {"Z2 equivariantization types", [&](Check& c) { equivariantization(c, reg); }},
      {"property suites", [&](Check& c) { property_suites(c, reg); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.name = checks[i].first;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      checks[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = elapsed(t0);
    r.pass = c.failures.empty();
    if (r.pass) {
      r.detail = join(c.notes, "; ");
    } else {
      std::vector<std::string> shown(c.failures.begin(), c.failures.begin() + std::min<std::size_t>(c.failures.size(), 5));
      r.detail = "failed: " + join(shown, "; ");
      if (c.failures.size() > 5) r.detail += "; ... (" + std::to_string(c.failures.size()) + " failures)";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << " (" << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace fusionlab
