#include "fusionlab/moddata.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fusionlab/error.hpp"

namespace fusionlab {

Cyclotomic ModularData::global_dim() const {
  Cyclotomic d;
  for (std::size_t x = 0; x < rank(); ++x) d += dim(x) * dim(x);
  return d;
}

namespace {

// Algebraic integers of Q(zeta_m) in exponent form; sums of products stay
// unreduced until the final conversion.
using Sparse = std::vector<std::pair<std::size_t, long>>;

long common_conductor(const CycloMatrix& s) {
  long m = 1;
  for (const auto& row : s) {
    for (const Cyclotomic& v : row) m = std::lcm(m, v.conductor());
  }
  return m;
}

Sparse to_sparse(const Cyclotomic& c, long m) {
  Sparse out;
  std::vector<Rational> coeffs = c.coefficients_at(m);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (coeffs[k].get_den() != 1) throw Error(ErrorCode::InvariantFailure, "S entries must be algebraic integers");
    out.emplace_back(k, coeffs[k].get_num().get_si());
  }
  return out;
}

void add_product(std::vector<long>& acc, const Sparse& a, const Sparse& b, long scale = 1) {
  const std::size_t m = acc.size();
  for (auto [i, u] : a) {
    for (auto [j, v] : b) acc[(i + j) % m] += scale * u * v;
  }
}

Sparse sparsify(const std::vector<long>& acc) {
  Sparse out;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) out.emplace_back(k, acc[k]);
  }
  return out;
}

Cyclotomic from_dense(const std::vector<long>& acc) {
  std::vector<Rational> coeffs(acc.begin(), acc.end());
  return Cyclotomic::from_exponents(static_cast<long>(acc.size()), coeffs);
}

struct SparseS {
  long m = 1;
  std::vector<std::vector<Sparse>> s, conj;
};

SparseS sparse_s(const ModularData& md) {
  SparseS out;
  out.m = common_conductor(md.s);
  const std::size_t n = md.rank();
  out.s.assign(n, std::vector<Sparse>(n));
  out.conj.assign(n, std::vector<Sparse>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.s[x][y] = to_sparse(md.s[x][y], out.m);
      out.conj[x][y] = to_sparse(md.s[x][y].conjugate(), out.m);
    }
  }
  return out;
}

}  // namespace

ModularData double_modular_data(const PermGroup& group) {
  const std::vector<ConjugacyClass> classes = conjugacy_classes(group);
  struct ClassData {
    std::size_t rep;
    PermGroup centralizer;
    CharacterTable table;
  };
  std::vector<ClassData> data;
  for (const ConjugacyClass& c : classes) {
    PermGroup cent = centralizer_in(group, c.representative);
    data.push_back({group.require_index(c.representative), cent, character_table(cent)});
  }
  ModularData md;
  std::vector<std::pair<std::size_t, std::size_t>> index;  // (class, row)
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t row = 0; row < data[c].table.size(); ++row) {
      const Permutation& a = group.element(data[c].rep);
      long dim = static_cast<long>(classes[c].size()) * data[c].table.degrees[row];
      md.labels.push_back("[" + a.to_cycles() + "|" + std::to_string(row) + "]");
      md.double_labels.push_back({a, row, dim});
      md.t.push_back(data[c].table.value(row, a) / Cyclotomic(data[c].table.degrees[row]));
      index.emplace_back(c, row);
    }
  }
  const std::size_t n = md.labels.size();
  md.s.assign(n, std::vector<Cyclotomic>(n));
  const long order = static_cast<long>(group.order());
  for (std::size_t ca = 0; ca < classes.size(); ++ca) {
    for (std::size_t cb = ca; cb < classes.size(); ++cb) {
      const std::size_t a = data[ca].rep, b = data[cb].rep;
      // Count g with a commuting with g b g^-1, by the classes of g b g^-1 in
      // C(a) and of g^-1 a g in C(b).
      std::map<std::pair<std::size_t, std::size_t>, long> counts;
      for (std::size_t g = 0; g < group.order(); ++g) {
        const std::size_t gi = group.inverse(g);
        const std::size_t c = group.multiply(group.multiply(g, b), gi);
        if (group.multiply(a, c) != group.multiply(c, a)) continue;
        const std::size_t d = group.multiply(group.multiply(gi, a), g);
        ++counts[{data[ca].table.class_index(group.element(c)), data[cb].table.class_index(group.element(d))}];
      }
      const Rational scale(order, static_cast<long>(data[ca].centralizer.order() * data[cb].centralizer.order()));
      for (std::size_t x = 0; x < n; ++x) {
        if (index[x].first != ca) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (index[y].first != cb) continue;
          const auto& chi = data[ca].table.chars[index[x].second];
          const auto& psi = data[cb].table.chars[index[y].second];
          Cyclotomic sum;
          for (const auto& [key, count] : counts) sum += Cyclotomic(count) * (chi[key.first] * psi[key.second]).conjugate();
          sum *= Cyclotomic(scale);
          md.s[x][y] = sum;
          md.s[y][x] = sum;
        }
      }
    }
  }
  verify_modular_data(md);
  for (std::size_t x = 0; x < n; ++x) {
    if (md.dim(x) != Cyclotomic(md.double_labels[x].dim)) throw Error(ErrorCode::InvariantFailure, "S row 0 differs from label dimensions");
  }
  if (md.global_dim() != Cyclotomic(order * order)) throw Error(ErrorCode::InvariantFailure, "global dimension differs from |G|^2");
  return md;
}

std::vector<std::size_t> verify_modular_data(const ModularData& md) {
  const std::size_t n = md.rank();
  if (n == 0 || md.s.size() != n || md.t.size() != n) throw Error(ErrorCode::InvariantFailure, "shape: sizes of labels, S and T differ");
  for (const auto& row : md.s) {
    if (row.size() != n) throw Error(ErrorCode::InvariantFailure, "shape: S is not square");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (md.s[x][y] != md.s[y][x]) throw Error(ErrorCode::InvariantFailure, "S symmetric: fails at (" + md.labels[x] + ", " + md.labels[y] + ")");
    }
  }
  if (md.s[0][0] != Cyclotomic(1)) throw Error(ErrorCode::InvariantFailure, "S[0][0] = 1");
  for (std::size_t x = 0; x < n; ++x) {
    const Cyclotomic& d = md.dim(x);
    if (d.conjugate() != d || d.numeric().real() <= 0) throw Error(ErrorCode::InvariantFailure, "dims positive: fails at " + md.labels[x]);
  }
  if (md.t[0] != Cyclotomic(1)) throw Error(ErrorCode::InvariantFailure, "T[0] = 1");
  for (std::size_t x = 0; x < n; ++x) {
    if (md.t[x] * md.t[x].conjugate() != Cyclotomic(1)) throw Error(ErrorCode::InvariantFailure, "T unitary: fails at " + md.labels[x]);
  }
  const Cyclotomic global = md.global_dim();
  const SparseS sp = sparse_s(md);
  std::vector<std::size_t> charge(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<long> acc(static_cast<std::size_t>(sp.m), 0);
      for (std::size_t y = 0; y < n; ++y) add_product(acc, sp.s[x][y], sp.s[y][z]);
      Cyclotomic v = from_dense(acc);
      if (v.is_zero()) continue;
      if (v != global || charge[x] != n) throw Error(ErrorCode::InvariantFailure, "S^2 = D C: fails in row " + md.labels[x]);
      charge[x] = z;
    }
    if (charge[x] == n) throw Error(ErrorCode::InvariantFailure, "S^2 = D C: zero row " + md.labels[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (charge[charge[x]] != x) throw Error(ErrorCode::InvariantFailure, "S^2 = D C: C is not an involution");
  }
  return charge;
}

FusionRing verlinde_fusion(const ModularData& md) {
  const std::size_t n = md.rank();
  const SparseS sp = sparse_s(md);
  const Cyclotomic global = md.global_dim();
  const std::size_t m = static_cast<std::size_t>(sp.m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<long> acc(m, 0);
      for (std::size_t y = 0; y < n; ++y) add_product(acc, sp.s[x][y], sp.conj[y][z]);
      if (from_dense(acc) != (x == z ? global : Cyclotomic())) throw Error(ErrorCode::SingularS, "S S* is not D times the identity");
    }
  }
  std::vector<int> tensor(n * n * n, 0);
  auto store = [&](std::size_t x, std::size_t y, std::size_t z, const Cyclotomic& v) {
    auto q = v.rational_part();
    if (!q || q->get_den() != 1 || *q < 0) {
      throw Error(ErrorCode::NonIntegralMultiplicity, "N(" + md.labels[x] + ", " + md.labels[y] + ", " + md.labels[z] + ") = " + v.to_string());
    }
    tensor[(x * n + y) * n + z] = static_cast<int>(q->get_num().get_si());
  };
  bool integral = global.is_integer();
  for (std::size_t t = 0; t < n && integral; ++t) integral = md.dim(t).is_integer();
  if (integral) {
    long lcm = 1;
    std::vector<long> d(n);
    for (std::size_t t = 0; t < n; ++t) {
      d[t] = md.dim(t).rational_part()->get_num().get_si();
      lcm = std::lcm(lcm, d[t]);
    }
    const Cyclotomic denom(Rational(1) / (Rational(lcm) * *global.rational_part()));
    std::vector<Sparse> p(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t t = 0; t < n; ++t) {
          std::vector<long> acc(m, 0);
          add_product(acc, sp.s[x][t], sp.s[y][t], lcm / d[t]);
          p[t] = sparsify(acc);
        }
        for (std::size_t z = 0; z < n; ++z) {
          std::vector<long> acc(m, 0);
          for (std::size_t t = 0; t < n; ++t) add_product(acc, p[t], sp.conj[z][t]);
          store(x, y, z, from_dense(acc) * denom);
        }
      }
    }
  } else {
    std::vector<Cyclotomic> w(n);
    for (std::size_t t = 0; t < n; ++t) w[t] = (md.dim(t) * global).inverse();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          Cyclotomic v;
          for (std::size_t t = 0; t < n; ++t) v += md.s[x][t] * md.s[y][t] * md.s[z][t].conjugate() * w[t];
          store(x, y, z, v);
        }
      }
    }
  }
  std::vector<std::size_t> dual(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (tensor[(x * n + y) * n] == 1) dual[x] = y;
    }
    if (dual[x] == n) throw Error(ErrorCode::InvariantFailure, "no dual for " + md.labels[x]);
  }
  FusionRing ring(md.labels, std::move(dual), std::move(tensor));
  validate(ring);
  return ring;
}

namespace {

std::vector<std::size_t> with_duals(const ModularData& md, std::span<const std::size_t> subset) {
  std::vector<std::size_t> out(subset.begin(), subset.end());
  // The dual of X is the label whose S row is the conjugate of X's.
  for (std::size_t x : subset) {
    for (std::size_t y = 0; y < md.rank(); ++y) {
      bool match = true;
      for (std::size_t z = 0; z < md.rank() && match; ++z) match = md.s[y][z] == md.s[x][z].conjugate();
      if (match) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> centralizer_subset(const ModularData& md, std::span<const std::size_t> subset) {
  const std::vector<std::size_t> closed = with_duals(md, subset);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < md.rank(); ++x) {
    bool ok = true;
    for (std::size_t y : closed) {
      if (md.s[x][y] != md.dim(x) * md.dim(y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> muger_center(const ModularData& md) {
  std::vector<std::size_t> all(md.rank());
  std::iota(all.begin(), all.end(), 0);
  return centralizer_subset(md, all);
}

std::string symmetry_kind_name(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::Tannakian: return "TANNAKIAN";
    case SymmetryKind::SuperTannakianOnly: return "SUPER_TANNAKIAN_ONLY";
    case SymmetryKind::NotSymmetric: return "NOT_SYMMETRIC";
  }
  return "NOT_SYMMETRIC";
}

SymmetryKind is_tannakian_subset(const ModularData& md, std::span<const std::size_t> subset) {
  const std::vector<std::size_t> cent = centralizer_subset(md, subset);
  for (std::size_t x : subset) {
    if (!std::binary_search(cent.begin(), cent.end(), x)) return SymmetryKind::NotSymmetric;
  }
  for (std::size_t x : subset) {
    if (md.t[x] != Cyclotomic(1)) return SymmetryKind::SuperTannakianOnly;
  }
  return SymmetryKind::Tannakian;
}

std::vector<std::size_t> projective_centralizer(const ModularData& md, const FusionRing& verlinde,
                                                std::span<const std::size_t> subset) {
  std::vector<std::size_t> targets;
  for (std::size_t y : subset) {
    for (std::size_t z : verlinde.support(y, verlinde.dual(y))) targets.push_back(z);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return centralizer_subset(md, targets);
}

std::vector<std::size_t> pointed_part(const ModularData& md) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < md.rank(); ++x) {
    if (md.dim(x) == Cyclotomic(1)) out.push_back(x);
  }
  return out;
}

std::complex<double> central_charge(const ModularData& md) {
  std::complex<double> tau = 0;
  double global = 0;
  for (std::size_t x = 0; x < md.rank(); ++x) {
    const double d = md.dim(x).numeric().real();
    tau += md.t[x].numeric() * d * d;
    global += d * d;
  }
  return tau / std::sqrt(global);
}

std::optional<std::vector<std::size_t>> s_equivalence(const ModularData& a, const ModularData& b, std::uint64_t node_budget) {
  const std::size_t n = a.rank();
  if (b.rank() != n) return std::nullopt;
  auto keys = [](const ModularData& md) {
    std::vector<std::vector<Cyclotomic>> out;
    for (std::size_t x = 0; x < md.rank(); ++x) {
      std::vector<Cyclotomic> row = md.s[x];
      std::sort(row.begin(), row.end());
      row.insert(row.begin(), md.dim(x));
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto ka = keys(a), kb = keys(b);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (ka[x] == kb[y] && (x == 0) == (y == 0)) candidates[x].push_back(y);
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return candidates[x].size() < candidates[y].size(); });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(n, kUnset);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  auto solve = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    const std::size_t x = order[pos];
    for (std::size_t y : candidates[x]) {
      if (used[y]) continue;
      if (++nodes > node_budget) {
        throw Error(ErrorCode::SearchBudgetExceeded, "S-equivalence search exceeded " + std::to_string(node_budget) + " nodes");
      }
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) ok = a.s[x][order[q]] == b.s[y][f[order[q]]];
      ok = ok && a.s[x][x] == b.s[y][y];
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      if (self(self, pos + 1)) return true;
      used[y] = false;
      f[x] = kUnset;
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  if (!is_witness(verlinde_fusion(a), verlinde_fusion(b), f)) {
    throw Error(ErrorCode::InvariantFailure, "S-equivalence is not a Grothendieck equivalence of the Verlinde rings");
  }
  return f;
}

ModularData relabeled(const ModularData& md, std::span<const std::size_t> perm) {
  const std::size_t n = md.rank();
  ModularData out;
  out.labels.resize(n);
  out.t.resize(n);
  out.s.assign(n, std::vector<Cyclotomic>(n));
  if (!md.double_labels.empty()) out.double_labels.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.labels[perm[x]] = md.labels[x];
    out.t[perm[x]] = md.t[x];
    if (!md.double_labels.empty()) out.double_labels[perm[x]] = md.double_labels[x];
    for (std::size_t y = 0; y < n; ++y) out.s[perm[x]][perm[y]] = md.s[x][y];
  }
  return out;
}

}  // namespace fusionlab
