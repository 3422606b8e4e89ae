#include "fusionlab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "fusionlab/error.hpp"

namespace fusionlab {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>;

// Characteristic polynomial (constant term first) by Faddeev-LeVerrier;
// valid because p exceeds the matrix size.
ModVec char_poly(const ModMat& a, u64 p) {
  const std::size_t n = a.size();
  ModVec c(n + 1, 0);
  c[n] = 1;
  ModMat m(n, ModVec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    ModMat am(n, ModVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] = (am[i][j] + mul_mod(a[i][l], m[l][j], p)) % p;
      }
    }
    for (std::size_t i = 0; i < n; ++i) am[i][i] = (am[i][i] + c[n - k + 1]) % p;
    m = std::move(am);
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr = (tr + mul_mod(a[i][l], m[l][i], p)) % p;
    }
    u64 val = mul_mod(tr, inv_mod(k % p, p), p);
    c[n - k] = (p - val) % p;
  }
  return c;
}

// Null space of a (rows x cols) over F_p, basis vectors of length cols.
std::vector<ModVec> null_space(ModMat a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mul_mod(f, a[r][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduce a list of vectors to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<ModVec>& rows, u64 p) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    u64 inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + p - mul_mod(f, rows[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

struct Structure {
  std::size_t r = 0;
  std::vector<u64> a;  // a[(j*r + k)*r + l]
  u64 at(std::size_t j, std::size_t k, std::size_t l) const { return a[(j * r + k) * r + l]; }
};

Structure class_structure_constants(const PermGroup& g, const std::vector<ConjugacyClass>& classes,
                                    const std::vector<std::size_t>& class_of) {
  Structure s;
  s.r = classes.size();
  s.a.assign(s.r * s.r * s.r, 0);
  for (std::size_t l = 0; l < s.r; ++l) {
    const std::size_t z = classes[l].members.front();
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t y = g.multiply(g.inverse(x), z);
      ++s.a[(class_of[x] * s.r + class_of[y]) * s.r + l];
    }
  }
  return s;
}

std::vector<ModVec> split_eigenspaces(const Structure& s, u64 p) {
  const std::size_t r = s.r;
  std::vector<std::vector<ModVec>> pending;
  std::vector<ModVec> full;
  for (std::size_t i = 0; i < r; ++i) {
    ModVec v(r, 0);
    v[i] = 1;
    full.push_back(v);
  }
  pending.push_back(full);
  std::vector<ModVec> done;
  while (!pending.empty()) {
    std::vector<ModVec> basis = std::move(pending.back());
    pending.pop_back();
    if (basis.size() == 1) {
      done.push_back(basis[0]);
      continue;
    }
    std::vector<std::size_t> pivots = rref(basis, p);
    const std::size_t d = basis.size();
    bool split = false;
    for (std::size_t j = 1; j < r && !split; ++j) {
      // Restriction of M_j to the span: coordinates read off at the pivots.
      ModMat a(d, ModVec(d, 0));
      std::vector<ModVec> images(d, ModVec(r, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t k = 0; k < r; ++k) {
          u64 sum = 0;
          for (std::size_t l = 0; l < r; ++l) {
            u64 coef = s.at(j, k, l);
            if (coef != 0 && basis[c][l] != 0) sum = (sum + mul_mod(coef % p, basis[c][l], p)) % p;
          }
          images[c][k] = sum;
        }
        for (std::size_t c2 = 0; c2 < d; ++c2) a[c2][c] = images[c][pivots[c2]];
      }
      ModVec poly = char_poly(a, p);
      std::vector<u64> roots;
      for (u64 lambda = 0; lambda < p; ++lambda) {
        u64 val = 0;
        for (std::size_t i = poly.size(); i-- > 0;) val = (mul_mod(val, lambda, p) + poly[i]) % p;
        if (val == 0) roots.push_back(lambda);
      }
      if (roots.size() <= 1) continue;
      std::size_t total = 0;
      std::vector<std::vector<ModVec>> pieces;
      for (u64 lambda : roots) {
        ModMat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        std::vector<ModVec> kernel = null_space(shifted, p);
        std::vector<ModVec> piece;
        for (const ModVec& u : kernel) {
          ModVec v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (u[c] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mul_mod(u[c], basis[c][k], p)) % p;
          }
          piece.push_back(std::move(v));
        }
        total += piece.size();
        pieces.push_back(std::move(piece));
      }
      if (total != d) throw Error(ErrorCode::LiftFailure, "class-sum matrix is not diagonalizable mod p");
      for (auto& piece : pieces) pending.push_back(std::move(piece));
      split = true;
    }
    if (!split) throw Error(ErrorCode::LiftFailure, "common eigenspace of dimension > 1 mod p");
  }
  return done;
}

}  // namespace

std::size_t CharacterTable::dual_row(std::size_t row) const {
  for (std::size_t i = 0; i < chars.size(); ++i) {
    bool match = true;
    for (std::size_t c = 0; c < classes.size() && match; ++c) {
      match = chars[i][c] == chars[row][inverse_class[c]];
    }
    if (match) return i;
  }
  throw Error(ErrorCode::InvariantFailure, "no conjugate character found");
}

CharacterTable character_table(const PermGroup& group) {
  CharacterTable t;
  t.group = group;
  t.classes = conjugacy_classes(group);
  const std::size_t r = t.classes.size();
  const std::size_t order = group.order();
  t.class_of.assign(order, 0);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t m : t.classes[c].members) t.class_of[m] = c;
  }
  t.inverse_class.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    t.inverse_class[c] = t.class_of[group.inverse(t.classes[c].members.front())];
  }
  std::size_t max_class = 1;
  t.exponent = 1;
  for (const auto& c : t.classes) {
    t.exponent = std::lcm(t.exponent, c.representative.order());
    max_class = std::max(max_class, c.size());
  }
  const double bound = 2.0 * std::sqrt(static_cast<double>(order)) * static_cast<double>(max_class);
  u64 p = t.exponent + 1;
  while (static_cast<double>(p) <= bound || !is_prime(p)) p += t.exponent;
  t.prime = p;
  const u64 root = primitive_root(p);

  Structure s = class_structure_constants(group, t.classes, t.class_of);
  std::vector<ModVec> eigen = split_eigenspaces(s, p);
  if (eigen.size() != r) throw Error(ErrorCode::LiftFailure, "wrong number of characters");

  // Classes of the powers g^k of each class representative.
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Permutation& g = t.classes[c].representative;
    std::size_t o = g.order();
    Permutation x = Permutation::identity(g.degree());
    for (std::size_t k = 0; k < o; ++k) {
      power_classes[c].push_back(t.class_index(x));
      x = x * g;
    }
  }

  for (ModVec w : eigen) {
    if (w[0] == 0) throw Error(ErrorCode::LiftFailure, "eigenvector vanishes at the identity class");
    u64 inv0 = inv_mod(w[0], p);
    for (auto& x : w) x = mul_mod(x, inv0, p);
    u64 sum = 0;
    for (std::size_t l = 0; l < r; ++l) {
      u64 h = t.classes[l].size() % p;
      sum = (sum + mul_mod(mul_mod(w[l], w[t.inverse_class[l]], p), inv_mod(h, p), p)) % p;
    }
    u64 deg_sq = mul_mod(order % p, inv_mod(sum, p), p);
    long degree = 0;
    for (long d = 1; static_cast<std::size_t>(d * d) <= order; ++d) {
      if (static_cast<u64>(d * d) % p == deg_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::LiftFailure, "character degree not recovered");
    ModVec values(r);
    for (std::size_t l = 0; l < r; ++l) {
      values[l] = mul_mod(mul_mod(w[l], static_cast<u64>(degree) % p, p), inv_mod(t.classes[l].size() % p, p), p);
    }
    std::vector<Cyclotomic> row(r);
    for (std::size_t l = 0; l < r; ++l) {
      const std::size_t o = power_classes[l].size();
      const u64 zeta = pow_mod(root, (p - 1) / o, p);
      const u64 inv_o = inv_mod(o % p, p);
      std::vector<Rational> mult(o);
      long total = 0;
      for (std::size_t j = 0; j < o; ++j) {
        u64 acc = 0;
        for (std::size_t k = 0; k < o; ++k) {
          u64 z = pow_mod(zeta, (p - 1 - ((j * k) % (p - 1))) % (p - 1), p);
          acc = (acc + mul_mod(values[power_classes[l][k]], z, p)) % p;
        }
        u64 m = mul_mod(acc, inv_o, p);
        if (m > static_cast<u64>(degree)) throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicity out of range");
        mult[j] = static_cast<long>(m);
        total += static_cast<long>(m);
      }
      if (total != degree) throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicities do not sum to the degree");
      row[l] = Cyclotomic::from_exponents(static_cast<long>(o), mult);
    }
    t.chars.push_back(std::move(row));
    t.degrees.push_back(degree);
  }

  std::vector<std::size_t> order_idx(r);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(t.chars[i].begin(), t.chars[i].end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return t.chars[a] < t.chars[b];
  });
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<long> degrees;
  for (std::size_t i : order_idx) {
    chars.push_back(std::move(t.chars[i]));
    degrees.push_back(t.degrees[i]);
  }
  t.chars = std::move(chars);
  t.degrees = std::move(degrees);

  // Exact certification: orthonormal rows.
  long sum_sq = 0;
  for (long d : t.degrees) sum_sq += d * d;
  if (static_cast<std::size_t>(sum_sq) != order) throw Error(ErrorCode::LiftFailure, "sum of squared degrees differs from |G|");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i; k < r; ++k) {
      Cyclotomic ip = inner_product(t, t.chars[i], t.chars[k]);
      if (ip != Cyclotomic(i == k ? 1 : 0)) throw Error(ErrorCode::LiftFailure, "lifted characters are not orthonormal");
    }
  }
  return t;
}

Cyclotomic inner_product(const CharacterTable& table, std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  const std::size_t r = table.classes.size();
  if (a.size() != r || b.size() != r) throw Error(ErrorCode::LengthMismatch, "class function length differs from class count");
  Cyclotomic sum;
  for (std::size_t j = 0; j < r; ++j) {
    if (a[j].is_zero() || b[j].is_zero()) continue;
    sum += Cyclotomic(static_cast<long>(table.classes[j].size())) * a[j] * b[j].conjugate();
  }
  return sum / Cyclotomic(static_cast<long>(table.group.order()));
}

FusionRing rep_g_fusion_ring(const CharacterTable& table) {
  const std::size_t n = table.size();
  const std::size_t r = table.classes.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> dual(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("chi" + std::to_string(i));
    dual[i] = table.dual_row(i);
  }
  std::vector<int> tensor(n * n * n, 0);
  std::vector<Cyclotomic> product(r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t c = 0; c < r; ++c) product[c] = table.chars[x][c] * table.chars[y][c];
      long total_dim = 0;
      for (std::size_t z = 0; z < n; ++z) {
        Cyclotomic m = inner_product(table, product, table.chars[z]);
        auto q = m.rational_part();
        if (!q || q->get_den() != 1 || *q < 0) {
          throw Error(ErrorCode::NonIntegralMultiplicity, "multiplicity " + m.to_string() + " is not a non-negative integer");
        }
        int mult = static_cast<int>(q->get_num().get_si());
        tensor[(x * n + y) * n + z] = mult;
        total_dim += mult * table.degrees[z];
      }
      if (total_dim != table.degrees[x] * table.degrees[y]) {
        throw Error(ErrorCode::NonIntegralMultiplicity, "product decomposition has the wrong dimension");
      }
    }
  }
  return FusionRing(std::move(labels), std::move(dual), std::move(tensor));
}

// ---------------------------------------------------------------------------
// Matrices

CycloMatrix identity_matrix(std::size_t n) {
  CycloMatrix m(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
  return m;
}

CycloMatrix matrix_multiply(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  CycloMatrix c(n, std::vector<Cyclotomic>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

Cyclotomic matrix_trace(const CycloMatrix& a) {
  Cyclotomic t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

namespace {

// Candidate subgroups: cyclic ones, then those generated by two elements.
std::vector<PermGroup> small_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out;
  std::set<std::vector<Permutation>> seen;
  auto add = [&](PermGroup h) {
    if (seen.insert(h.elements()).second) out.push_back(std::move(h));
  };
  for (const Permutation& x : g.elements()) add(PermGroup::from_generators(g.degree(), {x}));
  const std::size_t cyclic_count = out.size();
  for (std::size_t i = 0; i < cyclic_count; ++i) {
    for (std::size_t j = i + 1; j < cyclic_count; ++j) {
      std::vector<Permutation> gens = out[i].generators();
      for (const auto& y : out[j].generators()) gens.push_back(y);
      add(PermGroup::from_generators(g.degree(), gens));
    }
  }
  return out;
}

}  // namespace

std::vector<CycloMatrix> irreducible_representation(const CharacterTable& table, std::size_t row) {
  const PermGroup& g = table.group;
  const std::size_t order = g.order();
  const long degree = table.degrees[row];
  if (degree == 1) {
    std::vector<CycloMatrix> mats;
    for (std::size_t e = 0; e < order; ++e) mats.push_back(CycloMatrix{{table.chars[row][table.class_of[e]]}});
    return mats;
  }
  std::vector<PermGroup> subgroups = small_subgroups(g);
  std::stable_sort(subgroups.begin(), subgroups.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });
  for (const PermGroup& k : subgroups) {
    const std::size_t index = order / k.order();
    if (index < static_cast<std::size_t>(degree)) continue;
    CharacterTable kt = character_table(k);
    for (std::size_t lam = 0; lam < kt.size(); ++lam) {
      if (kt.degrees[lam] != 1) continue;
      Cyclotomic mult;
      for (const Permutation& x : k.elements()) mult += table.value(row, x) * kt.value(lam, x).conjugate();
      mult /= Cyclotomic(static_cast<long>(k.order()));
      if (mult != Cyclotomic(1)) continue;
      // Left transversal t_i K and the monomial induced representation.
      std::vector<Permutation> transversal;
      std::vector<bool> covered(order, false);
      for (std::size_t e = 0; e < order; ++e) {
        if (covered[e]) continue;
        transversal.push_back(g.element(e));
        for (const Permutation& y : k.elements()) covered[g.require_index(g.element(e) * y)] = true;
      }
      const std::size_t m = transversal.size();
      std::vector<CycloMatrix> induced(order, CycloMatrix(m, std::vector<Cyclotomic>(m)));
      for (std::size_t e = 0; e < order; ++e) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            Permutation y = transversal[i].inverse() * g.element(e) * transversal[j];
            if (k.contains(y)) induced[e][i][j] = kt.value(lam, y);
          }
        }
      }
      // Isotypic projector and a basis of its image.
      CycloMatrix proj(m, std::vector<Cyclotomic>(m));
      for (std::size_t e = 0; e < order; ++e) {
        Cyclotomic coef = table.chars[row][table.class_of[e]].conjugate();
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (!induced[e][i][j].is_zero()) proj[i][j] += coef * induced[e][i][j];
          }
        }
      }
      // Column echelon reduction picks independent columns of proj.
      std::vector<std::vector<Cyclotomic>> cols;
      std::vector<std::vector<Cyclotomic>> reduced;
      std::vector<std::size_t> lead;
      for (std::size_t j = 0; j < m && cols.size() < static_cast<std::size_t>(degree); ++j) {
        std::vector<Cyclotomic> col(m), work(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = work[i] = proj[i][j];
        for (std::size_t b = 0; b < reduced.size(); ++b) {
          if (work[lead[b]].is_zero()) continue;
          Cyclotomic f = work[lead[b]] / reduced[b][lead[b]];
          for (std::size_t i = 0; i < m; ++i) work[i] -= f * reduced[b][i];
        }
        std::size_t l = 0;
        while (l < m && work[l].is_zero()) ++l;
        if (l == m) continue;
        cols.push_back(col);
        reduced.push_back(work);
        lead.push_back(l);
      }
      const std::size_t d = cols.size();
      if (d != static_cast<std::size_t>(degree)) continue;
      // Coordinates: solve B X = rho(g) B via a d x d invertible minor of B.
      std::vector<std::size_t> rows_sel;
      {
        std::vector<std::vector<Cyclotomic>> basis_rows;
        std::vector<std::size_t> lead_rows;
        for (std::size_t i = 0; i < m && rows_sel.size() < d; ++i) {
          std::vector<Cyclotomic> r(d);
          for (std::size_t c = 0; c < d; ++c) r[c] = cols[c][i];
          for (std::size_t b = 0; b < basis_rows.size(); ++b) {
            if (r[lead_rows[b]].is_zero()) continue;
            Cyclotomic f = r[lead_rows[b]] / basis_rows[b][lead_rows[b]];
            for (std::size_t c = 0; c < d; ++c) r[c] -= f * basis_rows[b][c];
          }
          std::size_t l = 0;
          while (l < d && r[l].is_zero()) ++l;
          if (l == d) continue;
          basis_rows.push_back(r);
          lead_rows.push_back(l);
          rows_sel.push_back(i);
        }
      }
      // Inverse of the selected minor.
      CycloMatrix aug(d, std::vector<Cyclotomic>(2 * d));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d; ++c) aug[i][c] = cols[c][rows_sel[i]];
        aug[i][d + i] = Cyclotomic(1);
      }
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (aug[piv][c].is_zero()) ++piv;
        std::swap(aug[piv], aug[c]);
        Cyclotomic inv = aug[c][c].inverse();
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t i = 0; i < d; ++i) {
          if (i == c || aug[i][c].is_zero()) continue;
          Cyclotomic f = aug[i][c];
          for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
        }
      }
      CycloMatrix minor_inv(d, std::vector<Cyclotomic>(d));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) minor_inv[i][j] = aug[i][d + j];
      }
      std::vector<CycloMatrix> result(order);
      for (std::size_t e = 0; e < order; ++e) {
        CycloMatrix image(d, std::vector<Cyclotomic>(d));  // rows_sel rows of rho(g) B
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t c = 0; c < d; ++c) {
            Cyclotomic s;
            for (std::size_t j = 0; j < m; ++j) {
              if (!induced[e][rows_sel[i]][j].is_zero() && !cols[c][j].is_zero()) s += induced[e][rows_sel[i]][j] * cols[c][j];
            }
            image[i][c] = s;
          }
        }
        result[e] = matrix_multiply(minor_inv, image);
        if (matrix_trace(result[e]) != table.chars[row][table.class_of[e]]) {
          throw Error(ErrorCode::InvariantFailure, "constructed representation has the wrong character");
        }
      }
      return result;
    }
  }
  throw Error(ErrorCode::Unsupported, "no monomial construction found for character " + std::to_string(row));
}

}  // namespace fusionlab
