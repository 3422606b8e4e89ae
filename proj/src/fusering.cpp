#include "fusionlab/fusering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "fusionlab/error.hpp"

namespace fusionlab {

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<std::size_t> dual, std::vector<int> tensor)
    : labels_(std::move(labels)), dual_(std::move(dual)), tensor_(std::move(tensor)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "fusion ring needs at least the unit");
  if (dual_.size() != n) throw Error(ErrorCode::InvalidArgument, "dual table length differs from rank");
  if (tensor_.size() != n * n * n) throw Error(ErrorCode::InvalidArgument, "tensor length is not rank^3");
  for (std::size_t d : dual_) {
    if (d >= n) throw Error(ErrorCode::InvalidArgument, "dual index out of range");
  }
}

std::vector<std::size_t> FusionRing::support(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  const std::size_t n = rank();
  const int* row = &tensor_[(i * n + j) * n];
  for (std::size_t k = 0; k < n; ++k) {
    if (row[k] != 0) out.push_back(k);
  }
  return out;
}

namespace {

[[noreturn]] void violation(const std::string& axiom, const std::string& witness) {
  throw Error(ErrorCode::AxiomViolation, axiom + " at " + witness);
}

std::string idx(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Sparse rows: for each (i, j) the list of (k, N[i][j][k]) with N > 0.
std::vector<std::vector<std::pair<std::size_t, int>>> sparse_products(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        int v = ring(i, j, k);
        if (v != 0) rows[i * n + j].emplace_back(k, v);
      }
    }
  }
  return rows;
}

}  // namespace

void validate(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(i, j, k) < 0) violation("non-negativity", idx({i, j, k}));
      }
    }
  }
  if (ring.dual(0) != 0) violation("unit self-dual", idx({0}));
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.dual(ring.dual(i)) != i) violation("dual involution", idx({i}));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      int delta = j == k ? 1 : 0;
      if (ring(0, j, k) != delta) violation("left unit", idx({j, k}));
      if (ring(j, 0, k) != delta) violation("right unit", idx({j, k}));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int expect = j == ring.dual(i) ? 1 : 0;
      if (ring(i, j, 0) != expect) violation("duality", idx({i, j}));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(i, j, k) != ring(ring.dual(j), ring.dual(i), ring.dual(k))) {
          violation("transpose symmetry", idx({i, j, k}));
        }
      }
    }
  }
  auto rows = sparse_products(ring);
  std::vector<long> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (auto [m, a] : rows[i * n + j]) {
          for (auto [l, b] : rows[m * n + k]) left[l] += static_cast<long>(a) * b;
        }
        for (auto [m, a] : rows[j * n + k]) {
          for (auto [l, b] : rows[i * n + m]) right[l] += static_cast<long>(a) * b;
        }
        if (left != right) violation("associativity", idx({i, j, k}));
      }
    }
  }
}

FPDims fp_dims(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  auto rows = sparse_products(ring);
  FPDims out;
  // Power iteration on sum_i L_i, a positive matrix.
  std::vector<double> d(n, 1.0), next(n);
  for (int iter = 0; iter < 100000; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (auto [k, v] : rows[i * n + j]) next[j] += v * d[k];
      }
    }
    double scale = next[0];
    if (!(scale > 0)) throw Error(ErrorCode::NoPositiveEigenvector, "power iteration lost positivity");
    double change = 0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= scale;
      change = std::max(change, std::abs(next[j] - d[j]) / std::max(1.0, next[j]));
    }
    d.swap(next);
    if (change < 1e-15) break;
  }
  out.numeric = d;
  // Exact certification of a rounded integer vector.
  std::vector<long> rounded(n);
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    rounded[i] = std::lround(d[i]);
    if (rounded[i] < 1 || std::abs(d[i] - static_cast<double>(rounded[i])) > 1e-6) integral = false;
  }
  if (integral) {
    for (std::size_t i = 0; i < n && integral; ++i) {
      for (std::size_t j = 0; j < n && integral; ++j) {
        long s = 0;
        for (auto [k, v] : rows[i * n + j]) s += v * rounded[k];
        integral = s == rounded[i] * rounded[j];
      }
    }
  }
  out.integral = integral;
  if (integral) {
    out.exact = rounded;
    out.numeric.assign(rounded.begin(), rounded.end());
    for (long x : rounded) out.global_exact += x * x;
    out.global = static_cast<double>(out.global_exact);
    return out;
  }
  double residual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d[i] > 0)) throw Error(ErrorCode::NoPositiveEigenvector, "non-positive dimension");
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (auto [k, v] : rows[i * n + j]) s += v * d[k];
      residual = std::max(residual, std::abs(s - d[i] * d[j]) / (d[i] * d[j]));
    }
  }
  if (residual > 1e-10) throw Error(ErrorCode::NoPositiveEigenvector, "dimension equations not satisfied");
  for (double x : d) out.global += x * x;
  return out;
}

std::string TypeSignature::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) s += "; ";
    s += std::to_string(entries[i].first) + "," + std::to_string(entries[i].second);
  }
  return s + ")";
}

TypeSignature TypeSignature::parse(const std::string& text) {
  TypeSignature t;
  std::string body;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') body += c;
  }
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto comma = part.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "bad type signature '" + text + "'");
    t.entries.emplace_back(std::stol(part.substr(0, comma)), std::stoul(part.substr(comma + 1)));
  }
  return t;
}

TypeSignature type_signature(const FPDims& dims) {
  if (!dims.integral) throw Error(ErrorCode::Unsupported, "type signature needs integral dimensions");
  std::map<long, std::size_t> counts;
  for (long d : dims.exact) ++counts[d];
  TypeSignature t;
  for (auto [d, c] : counts) t.entries.emplace_back(d, c);
  return t;
}

TypeSignature type_signature(const FusionRing& ring) { return type_signature(fp_dims(ring)); }

namespace {

bool is_invertible(const FusionRing& ring, std::size_t i) {
  // i invertible iff i * dual(i) = unit exactly.
  auto s = ring.support(i, ring.dual(i));
  return s.size() == 1 && s[0] == 0 && ring(i, ring.dual(i), 0) == 1;
}

}  // namespace

InvertibleGroup invertibles(const FusionRing& ring) {
  InvertibleGroup g;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (is_invertible(ring, i)) g.basis.push_back(i);
  }
  const std::size_t n = g.basis.size();
  std::vector<std::size_t> local(ring.rank(), n);
  for (std::size_t a = 0; a < n; ++a) local[g.basis[a]] = a;
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto s = ring.support(g.basis[a], g.basis[b]);
      if (s.size() != 1 || local[s[0]] == n) throw Error(ErrorCode::InvariantFailure, "invertibles not closed");
      g.table[a * n + b] = local[s[0]];
    }
  }
  g.group = PermGroup::from_cayley_table(n, g.table);
  g.name = group_name(g.group);
  return g;
}

std::vector<std::size_t> invertible_stabilizer(const FusionRing& ring, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < ring.rank(); ++g) {
    if (is_invertible(ring, g) && ring(g, x, x) > 0) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> subring_generated(const FusionRing& ring, std::span<const std::size_t> seed) {
  const std::size_t n = ring.rank();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members;
  std::vector<std::size_t> work;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  add(0);
  for (std::size_t s : seed) {
    if (s >= n) throw Error(ErrorCode::InvalidArgument, "seed index out of range");
    add(s);
  }
  while (!work.empty()) {
    std::size_t x = work.back();
    work.pop_back();
    members.push_back(x);
    add(ring.dual(x));
    for (std::size_t y : std::vector<std::size_t>(members)) {
      for (std::size_t z : ring.support(x, y)) add(z);
      for (std::size_t z : ring.support(y, x)) add(z);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

std::vector<std::size_t> adjoint_of(const FusionRing& ring, const std::vector<std::size_t>& sub) {
  std::vector<std::size_t> seed;
  for (std::size_t x : sub) {
    for (std::size_t z : ring.support(x, ring.dual(x))) seed.push_back(z);
  }
  return subring_generated(ring, seed);
}

}  // namespace

AdjointSeries adjoint_series(const FusionRing& ring) {
  AdjointSeries s;
  std::vector<std::size_t> all(ring.rank());
  std::iota(all.begin(), all.end(), 0);
  s.chain.push_back(all);
  for (;;) {
    std::vector<std::size_t> next = adjoint_of(ring, s.chain.back());
    if (next == s.chain.back()) break;
    s.chain.push_back(std::move(next));
  }
  s.reaches_unit = s.chain.back().size() == 1;
  return s;
}

GradingDecomposition universal_grading(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::size_t> ad = adjoint_of(ring, all);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a : ad) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k : ring.support(a, j)) parent[find(j)] = find(k);
      for (std::size_t k : ring.support(j, a)) parent[find(j)] = find(k);
    }
  }
  GradingDecomposition g;
  std::map<std::size_t, std::size_t> root_block;
  g.block_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto it = root_block.find(r);
    if (it == root_block.end()) {
      it = root_block.emplace(r, g.blocks.size()).first;
      g.blocks.emplace_back();
    }
    g.block_of[i] = it->second;
    g.blocks[it->second].push_back(i);
  }
  g.neutral_block = g.block_of[0];
  if (g.neutral_block != 0 || g.blocks[0] != ad) {
    throw Error(ErrorCode::GradingInconsistent, "neutral component differs from the adjoint subring");
  }
  const std::size_t m = g.blocks.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.group_table.assign(m * m, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t& cell = g.group_table[g.block_of[i] * m + g.block_of[j]];
      for (std::size_t k : ring.support(i, j)) {
        if (cell == kUnset) cell = g.block_of[k];
        if (cell != g.block_of[k]) {
          throw Error(ErrorCode::GradingInconsistent,
                      "product " + idx({i, j}) + " meets two components");
        }
      }
    }
  }
  try {
    g.group = PermGroup::from_cayley_table(m, g.group_table);
  } catch (const Error& e) {
    throw Error(ErrorCode::GradingInconsistent, std::string("component law is not a group: ") + e.what());
  }
  return g;
}

std::vector<std::vector<std::size_t>> cyclic_quotient_components(const FusionRing& ring,
                                                                  const GradingDecomposition& grading,
                                                                  std::size_t q) {
  (void)ring;
  const std::size_t m = grading.order();
  if (m % q != 0) return {};
  auto mul = [&](std::size_t a, std::size_t b) { return grading.group_table[a * m + b]; };
  // Greedy generators of the block group.
  std::vector<std::size_t> gens;
  std::vector<bool> span(m, false);
  span[0] = true;
  for (std::size_t b = 0; b < m; ++b) {
    if (span[b]) continue;
    gens.push_back(b);
    std::vector<std::size_t> queue{0};
    std::fill(span.begin(), span.end(), false);
    span[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (std::size_t g : gens) {
        std::size_t y = mul(queue[h], g);
        if (!span[y]) {
          span[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> kernels;
  std::vector<std::size_t> images(gens.size(), 0);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) {
      if (std::all_of(images.begin(), images.end(), [](std::size_t v) { return v == 0; })) return;
      std::vector<std::size_t> phi(m, kUnset);
      phi[0] = 0;
      std::vector<std::size_t> queue{0};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          std::size_t y = mul(queue[h], gens[g]);
          std::size_t val = (phi[queue[h]] + images[g]) % q;
          if (phi[y] == kUnset) {
            phi[y] = val;
            queue.push_back(y);
          } else if (phi[y] != val) {
            return;
          }
        }
      }
      std::vector<std::size_t> kernel;
      for (std::size_t b = 0; b < m; ++b) {
        if (phi[b] == 0) kernel.push_back(b);
      }
      if (std::find(kernels.begin(), kernels.end(), kernel) == kernels.end()) kernels.push_back(kernel);
      return;
    }
    for (std::size_t v = 0; v < q; ++v) {
      images[k] = v;
      assign(k + 1);
    }
  };
  assign(0);
  std::sort(kernels.begin(), kernels.end());
  std::vector<std::vector<std::size_t>> components;
  for (const auto& kernel : kernels) {
    std::vector<std::size_t> basis;
    for (std::size_t b : kernel) basis.insert(basis.end(), grading.blocks[b].begin(), grading.blocks[b].end());
    std::sort(basis.begin(), basis.end());
    components.push_back(std::move(basis));
  }
  return components;
}

bool is_nilpotent(const FusionRing& ring) { return adjoint_series(ring).reaches_unit; }

bool is_cyclically_nilpotent(const FusionRing& ring) {
  std::map<std::vector<std::size_t>, bool> memo;
  std::function<bool(const std::vector<std::size_t>&)> rec = [&](const std::vector<std::size_t>& subset) -> bool {
    if (subset.size() == 1) return true;
    auto it = memo.find(subset);
    if (it != memo.end()) return it->second;
    FusionRing sub = restricted(ring, subset);
    GradingDecomposition g = universal_grading(sub);
    bool result = false;
    const std::size_t order = g.order();
    for (std::size_t q = 2; q <= order && !result; ++q) {
      bool prime = true;
      for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) prime = false;
      }
      if (!prime || order % q != 0) continue;
      for (const auto& comp : cyclic_quotient_components(sub, g, q)) {
        std::vector<std::size_t> original;
        for (std::size_t i : comp) original.push_back(subset[i]);
        if (rec(original)) {
          result = true;
          break;
        }
      }
    }
    memo[subset] = result;
    return result;
  };
  std::vector<std::size_t> all(ring.rank());
  std::iota(all.begin(), all.end(), 0);
  return rec(all);
}

FusionRing restricted(const FusionRing& ring, std::span<const std::size_t> subset) {
  std::vector<std::size_t> sub(subset.begin(), subset.end());
  std::sort(sub.begin(), sub.end());
  if (sub.empty() || sub[0] != 0) throw Error(ErrorCode::InvalidArgument, "subring must contain the unit");
  const std::size_t n = ring.rank();
  const std::size_t m = sub.size();
  std::vector<std::size_t> local(n, m);
  for (std::size_t a = 0; a < m; ++a) local[sub[a]] = a;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual(m);
  std::vector<int> tensor(m * m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(ring.labels()[sub[a]]);
    if (local[ring.dual(sub[a])] == m) throw Error(ErrorCode::InvalidArgument, "subset not closed under duality");
    dual[a] = local[ring.dual(sub[a])];
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k : ring.support(sub[a], sub[b])) {
        if (local[k] == m) throw Error(ErrorCode::InvalidArgument, "subset not closed under products");
        tensor[(a * m + b) * m + local[k]] = ring(sub[a], sub[b], k);
      }
    }
  }
  return FusionRing(std::move(labels), std::move(dual), std::move(tensor));
}

FusionRing relabeled(const FusionRing& ring, std::span<const std::size_t> perm) {
  const std::size_t n = ring.rank();
  if (perm.size() != n || perm[0] != 0) throw Error(ErrorCode::InvalidArgument, "relabeling must fix the unit");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw Error(ErrorCode::InvalidArgument, "relabeling is not a bijection");
    seen[p] = true;
  }
  std::vector<std::string> labels(n);
  std::vector<std::size_t> dual(n);
  std::vector<int> tensor(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = ring.labels()[i];
    dual[perm[i]] = perm[ring.dual(i)];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) tensor[(perm[i] * n + perm[j]) * n + perm[k]] = ring(i, j, k);
    }
  }
  return FusionRing(std::move(labels), std::move(dual), std::move(tensor));
}

FusionRing group_ring(const PermGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::string> labels;
  std::vector<std::size_t> dual(n);
  std::vector<int> tensor(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(group.element(a).to_cycles());
    dual[a] = group.inverse(a);
    for (std::size_t b = 0; b < n; ++b) tensor[(a * n + b) * n + group.multiply(a, b)] = 1;
  }
  return FusionRing(std::move(labels), std::move(dual), std::move(tensor));
}

bool is_ring_automorphism(const FusionRing& ring, std::span<const std::size_t> perm) {
  const std::size_t n = ring.rank();
  if (perm.size() != n || perm[0] != 0) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(perm[i], perm[j], perm[k]) != ring(i, j, k)) return false;
      }
    }
  }
  return true;
}

}  // namespace fusionlab
