#include "fusionlab/grotheq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "fusionlab/error.hpp"

namespace fusionlab {

namespace {

std::vector<long> scaled_dims(const FPDims& d) {
  std::vector<long> out;
  for (std::size_t i = 0; i < d.numeric.size(); ++i) {
    out.push_back(d.integral ? d.exact[i] * 1'000'000 : std::lround(d.numeric[i] * 1e6));
  }
  return out;
}

std::vector<std::vector<long>> element_profiles(const FusionRing& ring, const std::vector<long>& dims) {
  const std::size_t n = ring.rank();
  std::vector<std::vector<long>> profiles(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long>& p = profiles[i];
    p.push_back(dims[i]);
    p.push_back(ring.dual(i) == i ? 1 : 0);
    p.push_back(ring(i, ring.dual(i), 0));
    for (int side = 0; side < 2; ++side) {
      std::vector<std::array<long, 3>> triples;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          int v = side == 0 ? ring(i, j, k) : ring(j, i, k);
          if (v != 0) triples.push_back({dims[j], dims[k], v});
        }
      }
      std::sort(triples.begin(), triples.end());
      p.push_back(-1);
      for (const auto& t : triples) p.insert(p.end(), t.begin(), t.end());
    }
  }
  return profiles;
}

}  // namespace

Fingerprint fingerprint(const FusionRing& ring) {
  Fingerprint f;
  FPDims d = fp_dims(ring);
  f.type = d.integral ? type_signature(d).to_string() : "non-integral";
  f.profiles = element_profiles(ring, scaled_dims(d));
  std::sort(f.profiles.begin(), f.profiles.end());
  InvertibleGroup inv = invertibles(ring);
  f.invertible_data.push_back(static_cast<long>(inv.order()));
  for (std::size_t o : element_order_profile(inv.group)) f.invertible_data.push_back(static_cast<long>(o));
  for (const auto& level : adjoint_series(ring).chain) f.adjoint_sizes.push_back(level.size());
  GradingDecomposition g = universal_grading(ring);
  f.grading_data.push_back(static_cast<long>(g.order()));
  for (std::size_t o : element_order_profile(g.group)) f.grading_data.push_back(static_cast<long>(o));
  std::vector<long> block_sizes;
  for (const auto& b : g.blocks) block_sizes.push_back(static_cast<long>(b.size()));
  std::sort(block_sizes.begin(), block_sizes.end());
  f.grading_data.insert(f.grading_data.end(), block_sizes.begin(), block_sizes.end());
  return f;
}

bool is_witness(const FusionRing& a, const FusionRing& b, const EquivalenceWitness& w) {
  const std::size_t n = a.rank();
  if (b.rank() != n || w.size() != n || w[0] != 0) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t x : w) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (w[a.dual(i)] != b.dual(w[i])) return false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, j, k) != b(w[i], w[j], w[k])) return false;
      }
    }
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const FusionRing& a, const FusionRing& b, std::vector<std::size_t> class_a,
         std::vector<std::size_t> class_b, std::uint64_t budget)
      : a_(a), b_(b), n_(a.rank()), class_a_(std::move(class_a)), class_b_(std::move(class_b)), budget_(budget) {
    f_.assign(n_, kUnset);
    g_.assign(n_, kUnset);
    std::vector<std::size_t> count(n_ + 1, 0);
    for (std::size_t j = 0; j < n_; ++j) ++count[class_b_[j]];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return count[class_a_[x]] < count[class_a_[y]];
    });
  }

  std::optional<EquivalenceWitness> run() {
    std::vector<std::size_t> trail;
    if (!assign(0, 0, trail)) return std::nullopt;
    if (solve(0)) return f_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool row_classes_match(std::size_t x, std::size_t y) const {
    // Multisets of (class of z, N(x, y, z)) agree on both sides.
    std::vector<std::pair<std::size_t, int>> left, right;
    for (std::size_t z = 0; z < n_; ++z) {
      int v = a_(x, y, z);
      if (v != 0) left.emplace_back(class_a_[z], v);
      int u = b_(f_[x], f_[y], z);
      if (u != 0) right.emplace_back(class_b_[z], u);
    }
    if (left.size() != right.size()) return false;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return left == right;
  }

  bool consistent(std::size_t x) const {
    for (std::size_t y : assigned_) {
      if (!row_classes_match(x, y) || !row_classes_match(y, x)) return false;
      for (std::size_t z : assigned_) {
        if (a_(x, y, z) != b_(f_[x], f_[y], f_[z])) return false;
        if (a_(y, x, z) != b_(f_[y], f_[x], f_[z])) return false;
        if (a_(y, z, x) != b_(f_[y], f_[z], f_[x])) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t x, std::size_t y, std::vector<std::size_t>& trail) {
    if (f_[x] != kUnset) return f_[x] == y;
    if (g_[y] != kUnset || class_a_[x] != class_b_[y]) return false;
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::SearchBudgetExceeded, "equivalence search exceeded " + std::to_string(budget_) + " nodes");
    }
    f_[x] = y;
    g_[y] = x;
    assigned_.push_back(x);
    trail.push_back(x);
    if (!consistent(x)) return false;
    return assign(a_.dual(x), b_.dual(y), trail);
  }

  void undo(std::vector<std::size_t>& trail) {
    while (!trail.empty()) {
      std::size_t x = trail.back();
      trail.pop_back();
      g_[f_[x]] = kUnset;
      f_[x] = kUnset;
      assigned_.pop_back();
    }
  }

  bool solve(std::size_t pos) {
    while (pos < n_ && f_[order_[pos]] != kUnset) ++pos;
    if (pos == n_) return true;
    const std::size_t x = order_[pos];
    for (std::size_t y = 0; y < n_; ++y) {
      if (g_[y] != kUnset || class_b_[y] != class_a_[x]) continue;
      std::vector<std::size_t> trail;
      if (assign(x, y, trail) && solve(pos + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const FusionRing& a_;
  const FusionRing& b_;
  std::size_t n_;
  std::vector<std::size_t> class_a_, class_b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> f_, g_;
  std::vector<std::size_t> assigned_;
};

}  // namespace

std::optional<EquivalenceWitness> find_equivalence(const FusionRing& a, const FusionRing& b,
                                                   std::uint64_t node_budget) {
  if (a.rank() != b.rank()) return std::nullopt;
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  FPDims da = fp_dims(a), db = fp_dims(b);
  auto pa = element_profiles(a, scaled_dims(da));
  auto pb = element_profiles(b, scaled_dims(db));
  std::map<std::vector<long>, std::size_t> ids;
  std::vector<std::size_t> ca(a.rank()), cb(b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) ca[i] = ids.emplace(pa[i], ids.size()).first->second;
  for (std::size_t j = 0; j < b.rank(); ++j) {
    auto it = ids.find(pb[j]);
    if (it == ids.end()) return std::nullopt;
    cb[j] = it->second;
  }
  Search search(a, b, ca, cb, node_budget);
  auto w = search.run();
  if (w && !is_witness(a, b, *w)) throw Error(ErrorCode::InvariantFailure, "search returned an invalid witness");
  return w;
}

PropertyReport verify_properties(const FusionRing& a, const FusionRing& b, const EquivalenceWitness& w) {
  PropertyReport r;
  const std::size_t n = a.rank();
  bool bijection = b.rank() == n && w.size() == n && !w.empty() && w[0] == 0;
  if (bijection) {
    std::vector<bool> seen(n, false);
    for (std::size_t x : w) {
      if (x >= n || seen[x]) {
        bijection = false;
        break;
      }
      seen[x] = true;
    }
  }
  if (!bijection) return r;
  r.tensor = is_witness(a, b, w);
  FPDims da = fp_dims(a), db = fp_dims(b);
  r.dims = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(da.numeric[i] - db.numeric[w[i]]) > 1e-9 * std::max(1.0, da.numeric[i])) r.dims = false;
  }
  InvertibleGroup ia = invertibles(a), ib = invertibles(b);
  std::vector<std::size_t> mapped;
  for (std::size_t x : ia.basis) mapped.push_back(w[x]);
  std::sort(mapped.begin(), mapped.end());
  r.invertibles = mapped == ib.basis;
  r.duals = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[a.dual(i)] != b.dual(w[i])) r.duals = false;
  }
  AdjointSeries sa = adjoint_series(a), sb = adjoint_series(b);
  r.adjoint_series = sa.chain.size() == sb.chain.size();
  for (std::size_t level = 0; r.adjoint_series && level < sa.chain.size(); ++level) {
    std::vector<std::size_t> img;
    for (std::size_t x : sa.chain[level]) img.push_back(w[x]);
    std::sort(img.begin(), img.end());
    r.adjoint_series = img == sb.chain[level];
  }
  GradingDecomposition ga = universal_grading(a), gb = universal_grading(b);
  r.grading_group = ga.order() == gb.order();
  if (r.grading_group) {
    const std::size_t m = ga.order();
    std::vector<std::size_t> phi(m);
    for (std::size_t blk = 0; blk < m && r.grading_group; ++blk) {
      phi[blk] = gb.block_of[w[ga.blocks[blk].front()]];
      for (std::size_t x : ga.blocks[blk]) {
        if (gb.block_of[w[x]] != phi[blk]) r.grading_group = false;
      }
    }
    for (std::size_t x = 0; x < m && r.grading_group; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (phi[ga.group_table[x * m + y]] != gb.group_table[phi[x] * m + phi[y]]) {
          r.grading_group = false;
          break;
        }
      }
    }
    std::vector<std::size_t> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != m) r.grading_group = false;
  }
  return r;
}

}  // namespace fusionlab
