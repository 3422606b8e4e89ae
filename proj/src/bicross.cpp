#include "fusionlab/bicross.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusionlab/error.hpp"

namespace fusionlab {

GroupAction MatchedPair::gamma_action() const {
  GroupAction act{f, gamma.order(), std::vector<std::size_t>(f.order() * gamma.order())};
  for (std::size_t x = 0; x < f.order(); ++x) {
    for (std::size_t s = 0; s < gamma.order(); ++s) act.table[x * gamma.order() + s] = act_left(s, x);
  }
  return act;
}

MatchedPair matched_pair_from_factorization(const PermGroup& g, const PermGroup& f, const PermGroup& gamma) {
  if (!f.is_subgroup_of(g) || !gamma.is_subgroup_of(g)) {
    throw Error(ErrorCode::NotExactFactorization, "F and Gamma must be subgroups of G");
  }
  if (f.order() * gamma.order() != g.order()) {
    throw Error(ErrorCode::NotExactFactorization, "|F||Gamma| = " + std::to_string(f.order() * gamma.order()) +
                                                      " differs from |G| = " + std::to_string(g.order()));
  }
  for (std::size_t x = 1; x < f.order(); ++x) {
    if (gamma.contains(f.element(x))) throw Error(ErrorCode::NotExactFactorization, "F and Gamma intersect nontrivially");
  }
  const std::size_t nf = f.order(), ng = gamma.order();
  // Every element of G is uniquely f * t.
  std::vector<std::pair<std::size_t, std::size_t>> split(g.order());
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t t = 0; t < ng; ++t) split[g.require_index(f.element(x) * gamma.element(t))] = {x, t};
  }
  MatchedPair mp;
  mp.ambient = g;
  mp.f = f;
  mp.gamma = gamma;
  mp.left.resize(ng * nf);
  mp.right.resize(ng * nf);
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t x = 0; x < nf; ++x) {
      auto [fx, t] = split[g.require_index(gamma.element(s) * f.element(x))];
      mp.right[s * nf + x] = fx;
      mp.left[s * nf + x] = t;
    }
  }
  mp.dual_left.resize(nf * ng);
  mp.dual_right.resize(nf * ng);
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      std::size_t si = gamma.inverse(s), xi = f.inverse(x);
      mp.dual_left[x * ng + s] = f.inverse(mp.act_right(si, xi));
      mp.dual_right[x * ng + s] = gamma.inverse(mp.act_left(si, xi));
    }
  }
  // Action identities.
  for (std::size_t s = 0; s < ng; ++s) {
    if (mp.act_left(s, 0) != s || mp.act_right(s, 0) != 0) {
      throw Error(ErrorCode::GroupLawFailure, "identity of F does not act trivially");
    }
    for (std::size_t x = 0; x < nf; ++x) {
      for (std::size_t y = 0; y < nf; ++y) {
        if (mp.act_left(s, f.multiply(x, y)) != mp.act_left(mp.act_left(s, x), y)) {
          throw Error(ErrorCode::GroupLawFailure, "<| is not a right action");
        }
      }
    }
  }
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      for (std::size_t t = 0; t < ng; ++t) {
        if (mp.act_right(gamma.multiply(s, t), x) != mp.act_right(s, mp.act_right(t, x))) {
          throw Error(ErrorCode::GroupLawFailure, "|> is not a left action");
        }
        if (mp.dual_left[x * ng + gamma.multiply(s, t)] != mp.dual_left[mp.dual_left[x * ng + s] * ng + t]) {
          throw Error(ErrorCode::GroupLawFailure, "<|' is not a right action");
        }
      }
    }
  }
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t x = 0; x < nf; ++x) {
      for (std::size_t y = 0; y < nf; ++y) {
        if (mp.dual_right[f.multiply(x, y) * ng + s] != mp.dual_right[x * ng + mp.dual_right[y * ng + s]]) {
          throw Error(ErrorCode::GroupLawFailure, "|>' is not a left action");
        }
      }
    }
  }
  return mp;
}

MatchedPair swapped(const MatchedPair& mp) { return matched_pair_from_factorization(mp.ambient, mp.gamma, mp.f); }

MatchedPair pair_j(std::size_t n) {
  return matched_pair_from_factorization(symmetric_group(n), cyclic_group(n), parse_group_spec("S" + std::to_string(n - 1), n));
}

MatchedPair pair_k(std::size_t n) {
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "K_n needs odd n so that C_n lies in A_n");
  return matched_pair_from_factorization(alternating_group(n), cyclic_group(n), parse_group_spec("A" + std::to_string(n - 1), n));
}

MatchedPair pair_h(std::size_t n) { return swapped(pair_j(n)); }
MatchedPair pair_l(std::size_t n) { return swapped(pair_k(n)); }

MatchedPair pair_b(std::size_t n) {
  return matched_pair_from_factorization(symmetric_group(n), PermGroup::from_generators(n, {Permutation::from_cycles(n, "(1,2)")}),
                                         alternating_group(n));
}

MatchedPair pair_b_dual(std::size_t n) { return swapped(pair_b(n)); }

namespace {

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '>') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    while (!p.empty() && p.front() == ' ') p.erase(p.begin());
    while (!p.empty() && p.back() == ' ') p.pop_back();
  }
  return parts;
}

}  // namespace

MatchedPair parse_pair_spec(std::string_view spec) {
  while (!spec.empty() && spec.front() == ' ') spec.remove_prefix(1);
  while (!spec.empty() && spec.back() == ' ') spec.remove_suffix(1);
  if (spec.empty()) throw Error(ErrorCode::ParseError, "empty pair specification");
  if (spec.front() != '(') {
    bool star = spec.back() == '*';
    std::string_view body = star ? spec.substr(0, spec.size() - 1) : spec;
    char family = body.front();
    std::size_t n = 0;
    try {
      n = std::stoul(std::string(body.substr(1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad pair name '" + std::string(spec) + "'");
    }
    if (family == 'B') return star ? pair_b_dual(n) : pair_b(n);
    if (star) throw Error(ErrorCode::ParseError, "only B<n>* has a starred form");
    if (family == 'J') return pair_j(n);
    if (family == 'K') return pair_k(n);
    if (family == 'H') return pair_h(n);
    if (family == 'L') return pair_l(n);
    throw Error(ErrorCode::ParseError, "unknown pair family in '" + std::string(spec) + "'");
  }
  if (spec.back() != ')') throw Error(ErrorCode::ParseError, "pair specification must end with ')'");
  std::string_view body = spec.substr(1, spec.size() - 2);
  auto in_pos = body.rfind(" in ");
  if (in_pos == std::string_view::npos) throw Error(ErrorCode::ParseError, "pair specification needs 'in <G>'");
  PermGroup g = parse_group_spec(body.substr(in_pos + 4));
  auto parts = split_top_level(body.substr(0, in_pos), ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "pair specification needs exactly Gamma,F");
  PermGroup gamma = parse_group_spec(parts[0], g.degree());
  PermGroup f = parse_group_spec(parts[1], g.degree());
  return matched_pair_from_factorization(g, f, gamma);
}

PermGroup bowtie_group(const MatchedPair& mp) {
  const std::size_t nf = mp.f.order(), ng = mp.gamma.order(), n = nf * ng;
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      for (std::size_t y = 0; y < nf; ++y) {
        for (std::size_t t = 0; t < ng; ++t) {
          std::size_t xx = mp.f.multiply(x, mp.act_right(s, y));
          std::size_t ss = mp.gamma.multiply(mp.act_left(s, y), t);
          table[(x * ng + s) * n + (y * ng + t)] = xx * ng + ss;
        }
      }
    }
  }
  // (x, s) -> x s must be a bijective homomorphism onto the ambient group.
  std::vector<std::size_t> image(n);
  std::vector<bool> hit(mp.ambient.order(), false);
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      std::size_t idx = mp.ambient.require_index(mp.f.element(x) * mp.gamma.element(s));
      if (hit[idx]) throw Error(ErrorCode::GroupLawFailure, "(x, s) -> x s is not injective");
      hit[idx] = true;
      image[x * ng + s] = idx;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (image[table[a * n + b]] != mp.ambient.multiply(image[a], image[b])) {
        throw Error(ErrorCode::GroupLawFailure, "bicrossed law disagrees with the ambient product");
      }
    }
  }
  try {
    return PermGroup::from_cayley_table(n, table);
  } catch (const Error& e) {
    throw Error(ErrorCode::GroupLawFailure, e.what());
  }
}

// ---------------------------------------------------------------------------
// Simple modules

namespace {

struct OrbitData {
  std::size_t rep = 0;
  std::vector<std::size_t> points;
  std::vector<std::size_t> coset_reps;   // per point of `points`
  std::vector<std::size_t> stab;         // F indices of the stabilizer of rep
  PermGroup stabilizer;
};

std::vector<OrbitData> orbit_data(const MatchedPair& mp) {
  std::vector<OrbitData> out;
  for (Orbit& o : orbits(mp.gamma_action())) {
    OrbitData d;
    d.rep = o.representative;
    d.points = o.points;
    d.coset_reps.assign(d.points.size(), mp.f.order());
    for (std::size_t x = 0; x < mp.f.order(); ++x) {
      std::size_t t = mp.act_left(d.rep, x);
      auto pos = static_cast<std::size_t>(std::lower_bound(d.points.begin(), d.points.end(), t) - d.points.begin());
      if (d.coset_reps[pos] == mp.f.order()) d.coset_reps[pos] = x;
      if (t == d.rep) d.stab.push_back(x);
    }
    d.stabilizer = std::move(o.stabilizer);
    out.push_back(std::move(d));
  }
  return out;
}

std::shared_ptr<const CharacterTable> cached_table(std::map<std::vector<Permutation>, std::shared_ptr<const CharacterTable>>& cache,
                                                   const PermGroup& g) {
  auto it = cache.find(g.elements());
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const CharacterTable>(character_table(g));
  cache.emplace(g.elements(), t);
  return t;
}

TypeSignature type_from_dims(const std::vector<long>& dims) {
  std::map<long, std::size_t> counts;
  for (long d : dims) ++counts[d];
  TypeSignature t;
  for (auto [d, c] : counts) t.entries.emplace_back(d, c);
  return t;
}

}  // namespace

SplitIrreps split_irreps(const MatchedPair& mp) {
  SplitIrreps out;
  std::map<std::vector<Permutation>, std::shared_ptr<const CharacterTable>> cache;
  std::vector<long> dims;
  long total = 0;
  for (const OrbitData& o : orbit_data(mp)) {
    auto table = cached_table(cache, o.stabilizer);
    for (std::size_t row = 0; row < table->size(); ++row) {
      ExtIrrep w;
      w.orbit_rep = o.rep;
      w.orbit = o.points;
      w.coset_reps = o.coset_reps;
      w.stabilizer = o.stabilizer;
      w.stabilizer_table = table;
      w.stab_char = row;
      w.dim = static_cast<long>(o.points.size()) * table->degrees[row];
      w.label = "[" + mp.gamma.element(o.rep).to_cycles() + "|" + std::to_string(row) + "]";
      dims.push_back(w.dim);
      total += w.dim * w.dim;
      out.irreps.push_back(std::move(w));
    }
  }
  if (static_cast<std::size_t>(total) != mp.f.order() * mp.gamma.order()) {
    throw Error(ErrorCode::InvariantFailure, "sum of squared simple dimensions differs from dim H");
  }
  out.type = type_from_dims(dims);
  return out;
}

TypeSignature split_type(const MatchedPair& mp) {
  std::map<std::vector<Permutation>, std::vector<long>> degree_cache;
  std::vector<long> dims;
  for (const Orbit& o : orbits(mp.gamma_action())) {
    auto it = degree_cache.find(o.stabilizer.elements());
    if (it == degree_cache.end()) {
      it = degree_cache.emplace(o.stabilizer.elements(), character_table(o.stabilizer).degrees).first;
    }
    for (long d : it->second) dims.push_back(static_cast<long>(o.points.size()) * d);
  }
  return type_from_dims(dims);
}

namespace {

// Elements of Z[zeta_m] as coefficient vectors over exponents 0..m-1; not
// reduced, which keeps products cheap in the inner loops.
using ZVec = std::vector<long>;

ZVec to_zvec(const Cyclotomic& c, long m) {
  std::vector<Rational> coeffs = c.coefficients_at(m);
  ZVec v(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].get_den() != 1) throw Error(ErrorCode::InvariantFailure, "character value is not an algebraic integer");
    v[k] = coeffs[k].get_num().get_si();
  }
  return v;
}

void add_product(ZVec& acc, const ZVec& a, const ZVec& b) {
  const std::size_t m = acc.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j] != 0) acc[(i + j) % m] += a[i] * b[j];
    }
  }
}

}  // namespace

FusionRing split_fusion_ring(const MatchedPair& mp) { return split_fusion_ring(mp, split_irreps(mp)); }

FusionRing split_fusion_ring(const MatchedPair& mp, const SplitIrreps& irreps) {
  const auto& ws = irreps.irreps;
  const std::size_t n = ws.size();
  const std::size_t nf = mp.f.order(), ng = mp.gamma.order();
  long m = 1;
  for (const Permutation& x : mp.f.elements()) m = std::lcm(m, static_cast<long>(x.order()));

  std::vector<std::size_t> rep_of(ng), pos_in_orbit(ng);
  for (const ExtIrrep& w : ws) {
    for (std::size_t i = 0; i < w.orbit.size(); ++i) {
      rep_of[w.orbit[i]] = w.orbit_rep;
      pos_in_orbit[w.orbit[i]] = i;
    }
  }
  // Irreps grouped by orbit representative.
  std::map<std::size_t, std::vector<std::size_t>> by_rep;
  for (std::size_t a = 0; a < n; ++a) by_rep[ws[a].orbit_rep].push_back(a);

  // values[a][i * nf + x] = chi_W(e_t # x) for t = orbit[i]; empty when zero.
  std::vector<std::vector<ZVec>> values(n);
  for (std::size_t a = 0; a < n; ++a) {
    const ExtIrrep& w = ws[a];
    values[a].assign(w.orbit.size() * nf, ZVec());
    for (std::size_t i = 0; i < w.orbit.size(); ++i) {
      const std::size_t t = w.orbit[i];
      const std::size_t c = w.coset_reps[i];
      for (std::size_t x = 0; x < nf; ++x) {
        if (mp.act_left(t, x) != t) continue;
        std::size_t h = mp.f.multiply(mp.f.multiply(c, x), mp.f.inverse(c));
        values[a][i * nf + x] = to_zvec(w.stabilizer_table->value(w.stab_char, mp.f.element(h)), m);
      }
    }
  }
  // conj chi_U(x) = chi_U(x^-1) on the stabilizer of each representative.
  std::vector<std::vector<ZVec>> conj_stab(n);
  std::map<std::size_t, std::vector<std::size_t>> stab_of_rep;
  for (std::size_t a = 0; a < n; ++a) {
    const ExtIrrep& w = ws[a];
    conj_stab[a].assign(nf, ZVec());
    auto& stab = stab_of_rep[w.orbit_rep];
    stab.clear();
    for (std::size_t x = 0; x < nf; ++x) {
      if (mp.act_left(w.orbit_rep, x) != w.orbit_rep) continue;
      stab.push_back(x);
      conj_stab[a][x] = to_zvec(w.stabilizer_table->value(w.stab_char, mp.f.element(mp.f.inverse(x))), m);
    }
  }

  std::vector<int> tensor(n * n * n, 0);
  std::map<std::size_t, std::vector<ZVec>> acc;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      acc.clear();
      const ExtIrrep& wa = ws[a];
      const ExtIrrep& wb = ws[b];
      // chi_{W (x) W'}(e_s # x) = sum_{g h = s} chi_W(e_g # (h |> x)) chi_W'(e_h # x)
      for (std::size_t i = 0; i < wa.orbit.size(); ++i) {
        const std::size_t g = wa.orbit[i];
        for (std::size_t j = 0; j < wb.orbit.size(); ++j) {
          const std::size_t h = wb.orbit[j];
          const std::size_t s = mp.gamma.multiply(g, h);
          if (rep_of[s] != s) continue;
          auto& slot = acc[s];
          if (slot.empty()) slot.assign(nf, ZVec());
          for (std::size_t x : stab_of_rep[s]) {
            const ZVec& v2 = values[b][j * nf + x];
            if (v2.empty()) continue;
            const ZVec& v1 = values[a][i * nf + mp.act_right(h, x)];
            if (v1.empty()) continue;
            if (slot[x].empty()) slot[x].assign(static_cast<std::size_t>(m), 0);
            add_product(slot[x], v1, v2);
          }
        }
      }
      long dim_total = 0;
      for (auto& [s, per_x] : acc) {
        const auto& stab = stab_of_rep[s];
        for (std::size_t c : by_rep[s]) {
          ZVec sum(static_cast<std::size_t>(m), 0);
          for (std::size_t x : stab) {
            if (!per_x[x].empty()) add_product(sum, per_x[x], conj_stab[c][x]);
          }
          std::vector<Rational> coeffs(sum.begin(), sum.end());
          Cyclotomic mult = Cyclotomic::from_exponents(m, coeffs) / Cyclotomic(static_cast<long>(stab.size()));
          auto q = mult.rational_part();
          if (!q || q->get_den() != 1 || *q < 0) {
            throw Error(ErrorCode::NonIntegralMultiplicity, "multiplicity " + mult.to_string() + " in " + wa.label + " x " + wb.label);
          }
          int value = static_cast<int>(q->get_num().get_si());
          tensor[(a * n + b) * n + c] = value;
          dim_total += value * ws[c].dim;
        }
      }
      if (dim_total != wa.dim * wb.dim) {
        throw Error(ErrorCode::SingularCharacterSystem, "tensor decomposition of " + wa.label + " x " + wb.label + " has the wrong dimension");
      }
    }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> dual(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(ws[a].label);
    for (std::size_t b = 0; b < n; ++b) {
      if (tensor[(a * n + b) * n] == 1) dual[a] = b;
    }
    if (dual[a] == n) throw Error(ErrorCode::InvariantFailure, "no dual found for " + ws[a].label);
  }
  return FusionRing(std::move(labels), std::move(dual), std::move(tensor));
}

ExtIrrepMatrices ext_irrep_matrices(const MatchedPair& mp, const ExtIrrep& irrep) {
  const std::vector<CycloMatrix> rho = irreducible_representation(*irrep.stabilizer_table, irrep.stab_char);
  const std::size_t u = static_cast<std::size_t>(irrep.stabilizer_table->degrees[irrep.stab_char]);
  const std::size_t k = irrep.orbit.size();
  const std::size_t d = k * u;
  auto local = [&](std::size_t t) {
    auto it = std::lower_bound(irrep.orbit.begin(), irrep.orbit.end(), t);
    return it != irrep.orbit.end() && *it == t ? static_cast<std::size_t>(it - irrep.orbit.begin()) : k;
  };
  ExtIrrepMatrices out;
  for (std::size_t t = 0; t < mp.gamma.order(); ++t) {
    CycloMatrix e(d, std::vector<Cyclotomic>(d));
    std::size_t i = local(t);
    if (i < k) {
      for (std::size_t r = 0; r < u; ++r) e[i * u + r][i * u + r] = Cyclotomic(1);
    }
    out.idempotents.push_back(std::move(e));
  }
  for (std::size_t x = 0; x < mp.f.order(); ++x) {
    CycloMatrix mx(d, std::vector<Cyclotomic>(d));
    const std::size_t xinv = mp.f.inverse(x);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t t = irrep.orbit[i];
      const std::size_t t2 = mp.act_left(t, xinv);
      const std::size_t j = local(t2);
      std::size_t h = mp.f.multiply(mp.f.multiply(irrep.coset_reps[j], x), mp.f.inverse(irrep.coset_reps[i]));
      const CycloMatrix& block = rho[irrep.stabilizer.require_index(mp.f.element(h))];
      for (std::size_t r = 0; r < u; ++r) {
        for (std::size_t c = 0; c < u; ++c) mx[j * u + r][i * u + c] = block[r][c];
      }
    }
    out.group.push_back(std::move(mx));
  }
  return out;
}

bool verify_ext_irrep_matrices(const MatchedPair& mp, const ExtIrrepMatrices& m) {
  const std::size_t ng = mp.gamma.order(), nf = mp.f.order();
  if (m.idempotents.empty()) return false;
  const std::size_t d = m.idempotents[0].size();
  CycloMatrix sum(d, std::vector<Cyclotomic>(d));
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t t = 0; t < ng; ++t) {
      CycloMatrix p = matrix_multiply(m.idempotents[s], m.idempotents[t]);
      CycloMatrix expect = s == t ? m.idempotents[s] : CycloMatrix(d, std::vector<Cyclotomic>(d));
      if (p != expect) return false;
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) sum[i][j] += m.idempotents[s][i][j];
    }
  }
  if (sum != identity_matrix(d)) return false;
  for (std::size_t x = 0; x < nf; ++x) {
    for (std::size_t t = 0; t < ng; ++t) {
      CycloMatrix lhs = matrix_multiply(m.group[x], m.idempotents[t]);
      CycloMatrix rhs = matrix_multiply(m.idempotents[mp.act_left(t, mp.f.inverse(x))], m.group[x]);
      if (lhs != rhs) return false;
    }
    for (const Permutation& gen : mp.f.generators()) {
      std::size_t y = mp.f.require_index(gen);
      if (matrix_multiply(m.group[x], m.group[y]) != m.group[mp.f.multiply(x, y)]) return false;
    }
  }
  return m.group[0] == identity_matrix(d);
}

DualInvertibles dual_invertibles(const MatchedPair& mp) {
  const std::size_t nf = mp.f.order(), ng = mp.gamma.order();
  CharacterTable ft = character_table(mp.f);
  // Linear characters as value lists over F.
  std::vector<std::vector<Cyclotomic>> chars;
  for (std::size_t row = 0; row < ft.size(); ++row) {
    if (ft.degrees[row] != 1) continue;
    std::vector<Cyclotomic> v(nf);
    for (std::size_t x = 0; x < nf; ++x) v[x] = ft.chars[row][ft.class_of[x]];
    chars.push_back(std::move(v));
  }
  auto find_char = [&](const std::vector<Cyclotomic>& v) {
    for (std::size_t c = 0; c < chars.size(); ++c) {
      if (chars[c] == v) return c;
    }
    throw Error(ErrorCode::GroupLawFailure, "image of a linear character is not a linear character");
  };
  DualInvertibles out;
  for (std::size_t s = 0; s < ng; ++s) {
    bool fixed = true;
    for (std::size_t x = 0; x < nf && fixed; ++x) fixed = mp.act_left(s, x) == s;
    if (fixed) out.fixed_points.push_back(s);
  }
  const std::size_t nc = chars.size(), n0 = out.fixed_points.size();
  std::vector<std::size_t> local(ng, n0);
  for (std::size_t i = 0; i < n0; ++i) local[out.fixed_points[i]] = i;
  // (s . chi)(x) = chi(x <|' s)
  std::vector<std::size_t> act(n0 * nc);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t c = 0; c < nc; ++c) {
      std::vector<Cyclotomic> v(nf);
      for (std::size_t x = 0; x < nf; ++x) v[x] = chars[c][mp.dual_left[x * ng + out.fixed_points[i]]];
      act[i * nc + c] = find_char(v);
    }
  }
  std::vector<std::size_t> mult(nc * nc);
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) {
      std::vector<Cyclotomic> v(nf);
      for (std::size_t x = 0; x < nf; ++x) v[x] = chars[a][x] * chars[b][x];
      mult[a * nc + b] = find_char(v);
    }
  }
  const std::size_t n = nc * n0;
  out.table.resize(n * n);
  for (std::size_t c1 = 0; c1 < nc; ++c1) {
    for (std::size_t i = 0; i < n0; ++i) {
      for (std::size_t c2 = 0; c2 < nc; ++c2) {
        for (std::size_t j = 0; j < n0; ++j) {
          std::size_t c = mult[c1 * nc + act[i * nc + c2]];
          std::size_t st = local[mp.gamma.multiply(out.fixed_points[i], out.fixed_points[j])];
          if (st == n0) throw Error(ErrorCode::GroupLawFailure, "fixed points are not closed");
          out.table[(c1 * n0 + i) * n + (c2 * n0 + j)] = c * n0 + st;
        }
      }
    }
  }
  try {
    out.group = PermGroup::from_cayley_table(n, out.table);
  } catch (const Error& e) {
    throw Error(ErrorCode::GroupLawFailure, e.what());
  }
  out.character_count = nc;
  out.center_order = center(out.group).order();
  out.name = group_name(out.group);
  return out;
}

TypeSignature equivariantization_type(const FusionRing& ring, std::span<const std::size_t> action, std::size_t p) {
  if (!is_ring_automorphism(ring, action)) throw Error(ErrorCode::NotAutomorphism, "basis permutation does not preserve the fusion rules");
  const std::size_t n = ring.rank();
  FPDims dims = fp_dims(ring);
  if (!dims.integral) throw Error(ErrorCode::Unsupported, "equivariantization type needs integral dimensions");
  std::vector<bool> seen(n, false);
  std::vector<long> out;
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = action[j]) {
      seen[j] = true;
      ++len;
    }
    const long d = dims.exact[i];
    if (len == 1) {
      for (std::size_t k = 0; k < p; ++k) out.push_back(d);
    } else if (len == p) {
      out.push_back(static_cast<long>(p) * d);
    } else {
      throw Error(ErrorCode::NotAutomorphism, "action has an orbit of size " + std::to_string(len) + ", not 1 or p");
    }
  }
  for (long d : out) total += d * d;
  if (total != static_cast<long>(p) * dims.global_exact) {
    throw Error(ErrorCode::InvariantFailure, "equivariantization dimension check failed");
  }
  return type_from_dims(out);
}

std::vector<std::size_t> conjugation_action(const PermGroup& group, const Permutation& g) {
  std::vector<std::size_t> perm(group.order());
  Permutation gi = g.inverse();
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto idx = group.index_of(gi * group.element(i) * g);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "conjugating element does not normalize the group");
    perm[i] = *idx;
  }
  return perm;
}

}  // namespace fusionlab
