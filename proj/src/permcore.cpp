#include "fusionlab/permcore.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "fusionlab/error.hpp"

namespace fusionlab {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorCode::InvalidArgument, "image sequence is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated cycle");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::size_t> cycle;
    if (body.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw Error(ErrorCode::ParseError, "bad point in cycle: '" + std::string(tok) + "'");
        }
        cycle.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      for (char c : body) {
        if (c == ' ') continue;
        if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad point in cycle");
        cycle.push_back(static_cast<std::size_t>(c - '0'));
      }
    }
    for (std::size_t v : cycle) {
      if (v < 1 || v > degree) {
        throw Error(ErrorCode::ParseError, "point " + std::to_string(v) + " outside degree " +
                                               std::to_string(degree));
      }
      if (used[v - 1]) throw Error(ErrorCode::ParseError, "point repeated in cycle notation");
      used[v - 1] = true;
    }
    // Cycles are disjoint, so applying them one after another is order-free.
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    }
    pos = close + 1;
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Permutation Permutation::pow(long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += ',';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::extended(std::size_t new_degree) const {
  if (new_degree < degree()) throw Error(ErrorCode::InvalidArgument, "cannot shrink permutation");
  Permutation out = identity(new_degree);
  for (std::size_t x = 0; x < degree(); ++x) out.images_[x] = images_[x];
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Data {
  std::size_t degree = 1;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

namespace {

std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                 std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation next = out[head] * g;
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
        if (out.size() > cap) {
          throw Error(ErrorCode::ClosureTooLarge,
                      "group order exceeds cap " + std::to_string(cap));
        }
      }
    }
  }
  return out;
}

// Greedy generating set: walk the sorted elements and keep any element not
// already in the span of the ones kept so far.
std::vector<Permutation> greedy_generators(std::size_t degree, const std::vector<Permutation>& sorted) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree)};
  for (const Permutation& g : sorted) {
    if (span.count(g)) continue;
    gens.push_back(g);
    std::vector<Permutation> grown = closure(degree, gens, sorted.size() + 1);
    span = std::unordered_set<Permutation, PermutationHash>(grown.begin(), grown.end());
    if (span.size() == sorted.size()) break;
  }
  return gens;
}

}  // namespace

PermGroup::PermGroup() : PermGroup(trivial_group(1)) {}

PermGroup::PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t order_cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
  }
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = closure(degree, generators, order_cap);
  std::sort(data->elements.begin(), data->elements.end());
  std::vector<Permutation> gens;
  for (Permutation& g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  data->generators = std::move(gens);
  data->index.reserve(data->elements.size() * 2);
  for (std::size_t i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  return PermGroup(std::move(data));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) {
    throw Error(ErrorCode::InvalidArgument, "element list must contain the identity");
  }
  for (const Permutation& g : elements) {
    if (g.degree() != degree) throw Error(ErrorCode::InvalidArgument, "element degree mismatch");
  }
  std::vector<Permutation> gens = greedy_generators(degree, elements);
  std::vector<Permutation> span = closure(degree, gens, elements.size() + 1);
  std::sort(span.begin(), span.end());
  if (span != elements) throw Error(ErrorCode::InvalidArgument, "element list is not closed");
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  data->generators = std::move(gens);
  data->index.reserve(data->elements.size() * 2);
  for (std::size_t i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  return PermGroup(std::move(data));
}

namespace {

Permutation right_regular(std::size_t n, std::span<const std::size_t> table, std::size_t g) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(table[x * n + g]);
  return Permutation(std::move(images));
}

}  // namespace

PermGroup PermGroup::from_cayley_table(std::size_t n, std::span<const std::size_t> table) {
  if (table.size() != n * n) throw Error(ErrorCode::InvalidArgument, "Cayley table size mismatch");
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (std::size_t g = 0; g < n; ++g) elements.push_back(right_regular(n, table, g));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (elements[a] * elements[b] != elements[table[a * n + b]]) {
        throw Error(ErrorCode::GroupLawFailure, "Cayley table is not associative");
      }
    }
  }
  return from_elements(n, std::move(elements));
}

std::size_t PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
const std::vector<Permutation>& PermGroup::elements() const { return data_->elements; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }

std::optional<std::size_t> PermGroup::index_of(const Permutation& g) const {
  if (g.degree() != data_->degree) return std::nullopt;
  auto it = data_->index.find(g);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::require_index(const Permutation& g) const {
  auto idx = index_of(g);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "element " + g.to_cycles() + " not in group");
  return *idx;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  return data_->index.at(data_->elements[a] * data_->elements[b]);
}

std::size_t PermGroup::inverse(std::size_t a) const {
  return data_->index.at(data_->elements[a].inverse());
}

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree() || other.order() % order() != 0) return false;
  for (const Permutation& g : elements()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

// ---------------------------------------------------------------------------
// Actions, classes, orbits

void GroupAction::validate() const {
  const std::size_t n = group.order();
  if (table.size() != n * domain_size) throw Error(ErrorCode::InvalidArgument, "action table size mismatch");
  for (std::size_t x = 0; x < domain_size; ++x) {
    if (apply(0, x) != x) throw Error(ErrorCode::InvalidArgument, "identity does not act trivially");
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t gh = group.multiply(g, h);
      for (std::size_t x = 0; x < domain_size; ++x) {
        if (apply(gh, x) != apply(h, apply(g, x))) {
          throw Error(ErrorCode::InvalidArgument, "action table violates x.(gh) = (x.g).h");
        }
      }
    }
  }
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  const auto& gens = group.generators();
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    // Orbit of x under conjugation by the generators.
    std::vector<std::size_t> members{x};
    assigned[x] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Permutation& y = group.element(members[head]);
      for (const Permutation& g : gens) {
        std::size_t z = group.require_index(g.inverse() * y * g);
        if (!assigned[z]) {
          assigned[z] = true;
          members.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(ConjugacyClass{group.element(members.front()), std::move(members)});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members.front() < b.members.front();
  });
  return classes;
}

PermGroup centralizer_in(const PermGroup& group, const Permutation& g) {
  if (g.degree() != group.degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  std::vector<Permutation> elems;
  for (const Permutation& h : group.elements()) {
    if (h * g == g * h) elems.push_back(h);
  }
  return PermGroup::from_elements(group.degree(), std::move(elems));
}

std::vector<Orbit> orbits(const GroupAction& action) {
  const std::size_t m = action.domain_size;
  const auto& gens = action.group.generators();
  std::vector<std::size_t> gen_index;
  for (const Permutation& g : gens) gen_index.push_back(action.group.require_index(g));
  std::vector<bool> seen(m, false);
  std::vector<Orbit> result;
  for (std::size_t x = 0; x < m; ++x) {
    if (seen[x]) continue;
    Orbit orbit;
    orbit.representative = x;
    orbit.points.push_back(x);
    seen[x] = true;
    for (std::size_t head = 0; head < orbit.points.size(); ++head) {
      for (std::size_t g : gen_index) {
        std::size_t y = action.apply(g, orbit.points[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.points.push_back(y);
        }
      }
    }
    std::sort(orbit.points.begin(), orbit.points.end());
    std::vector<Permutation> stab;
    for (std::size_t g = 0; g < action.group.order(); ++g) {
      if (action.apply(g, x) == x) stab.push_back(action.group.element(g));
    }
    orbit.stabilizer = PermGroup::from_elements(action.group.degree(), std::move(stab));
    result.push_back(std::move(orbit));
  }
  std::stable_sort(result.begin(), result.end(), [](const Orbit& a, const Orbit& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.representative < b.representative;
  });
  return result;
}

// ---------------------------------------------------------------------------
// Subgroups and structure

PermGroup subgroup_generated(const PermGroup& ambient, std::span<const Permutation> generators) {
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return PermGroup::from_generators(ambient.degree(), std::move(gens), ambient.order());
}

PermGroup subgroup_from_indices(const PermGroup& ambient, std::span<const std::size_t> indices) {
  std::vector<Permutation> elems;
  elems.reserve(indices.size());
  for (std::size_t i : indices) elems.push_back(ambient.element(i));
  return PermGroup::from_elements(ambient.degree(), std::move(elems));
}

namespace {

PermGroup normal_closure(const PermGroup& ambient, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (Permutation& s : seeds) {
    if (!s.is_identity()) gens.push_back(std::move(s));
  }
  PermGroup current = PermGroup::from_generators(ambient.degree(), gens, ambient.order());
  for (;;) {
    bool grown = false;
    for (const Permutation& g : ambient.generators()) {
      for (const Permutation& h : current.generators()) {
        Permutation conj = g.inverse() * h * g;
        if (!current.contains(conj)) {
          gens.push_back(conj);
          grown = true;
        }
      }
      if (grown) break;
    }
    if (!grown) return current;
    current = PermGroup::from_generators(ambient.degree(), gens, ambient.order());
  }
}

}  // namespace

PermGroup commutator(const PermGroup& ambient, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> seeds;
  for (const Permutation& x : a.generators()) {
    for (const Permutation& y : b.generators()) seeds.push_back(x.inverse() * y.inverse() * x * y);
  }
  return normal_closure(ambient, std::move(seeds));
}

PermGroup center(const PermGroup& group) {
  std::vector<Permutation> elems;
  for (const Permutation& z : group.elements()) {
    bool central = true;
    for (const Permutation& g : group.generators()) {
      if (z * g != g * z) {
        central = false;
        break;
      }
    }
    if (central) elems.push_back(z);
  }
  return PermGroup::from_elements(group.degree(), std::move(elems));
}

bool is_normal_in(const PermGroup& subgroup, const PermGroup& group) {
  if (!subgroup.is_subgroup_of(group)) return false;
  for (const Permutation& g : group.generators()) {
    for (const Permutation& h : subgroup.generators()) {
      if (!subgroup.contains(g.inverse() * h * g)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> element_order_profile(const PermGroup& group) {
  std::vector<std::size_t> orders;
  orders.reserve(group.order());
  for (const Permutation& g : group.elements()) orders.push_back(g.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<std::size_t> abelian_invariants(std::span<const std::size_t> element_orders) {
  const std::size_t order = element_orders.size();
  // Elementary divisor exponents per prime, largest first.
  std::map<std::size_t, std::vector<std::size_t>> exponents;
  for (std::size_t p : prime_factors(order)) {
    std::vector<std::size_t> log_counts;  // log_p |A[p^k]|, k = 0, 1, ...
    std::size_t pk = 1;
    for (;;) {
      std::size_t count = 0;
      for (std::size_t o : element_orders) {
        if (pk % o == 0) ++count;
      }
      std::size_t logc = 0;
      for (std::size_t c = count; c > 1; c /= p) ++logc;
      if (!log_counts.empty() && logc == log_counts.back()) break;
      log_counts.push_back(logc);
      pk *= p;
    }
    // r_k = #{i : e_i >= k}
    std::vector<std::size_t> parts;
    for (std::size_t k = 1; k < log_counts.size(); ++k) {
      std::size_t r = log_counts[k] - log_counts[k - 1];
      while (parts.size() < r) parts.push_back(0);
      for (std::size_t i = 0; i < r; ++i) ++parts[i];
    }
    exponents[p] = parts;
  }
  std::size_t rank = 0;
  for (auto& [p, parts] : exponents) rank = std::max(rank, parts.size());
  std::vector<std::size_t> factors(rank, 1);
  for (auto& [p, parts] : exponents) {
    // Largest exponent goes to the last invariant factor.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t pe = 1;
      for (std::size_t e = 0; e < parts[i]; ++e) pe *= p;
      factors[rank - 1 - i] *= pe;
    }
  }
  return factors;
}

std::vector<std::size_t> abelian_quotient_invariants(const PermGroup& group,
                                                     const PermGroup& normal_subgroup) {
  // One representative per coset; order of gN is the least k with g^k in N.
  std::vector<bool> covered(group.order(), false);
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (covered[i]) continue;
    const Permutation& g = group.element(i);
    for (const Permutation& n : normal_subgroup.elements()) covered[group.require_index(g * n)] = true;
    std::size_t k = 1;
    Permutation power = g;
    while (!normal_subgroup.contains(power)) {
      power = power * g;
      ++k;
    }
    orders.push_back(k);
  }
  return abelian_invariants(orders);
}

StructureInvariants structure_invariants(const PermGroup& group) {
  StructureInvariants inv;
  inv.center = center(group);
  inv.commutator_subgroup = commutator(group, group, group);
  inv.abelianization_type = abelian_quotient_invariants(group, inv.commutator_subgroup);
  PermGroup derived = group;
  for (;;) {
    if (derived.order() == 1) {
      inv.is_solvable = true;
      break;
    }
    PermGroup next = commutator(group, derived, derived);
    if (next.order() == derived.order()) break;
    derived = next;
  }
  PermGroup lower = group;
  for (;;) {
    if (lower.order() == 1) {
      inv.is_nilpotent = true;
      break;
    }
    PermGroup next = commutator(group, group, lower);
    if (next.order() == lower.order()) break;
    lower = next;
  }
  return inv;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(g.extended(degree));
  for (const Permutation& g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < b.degree(); ++x) images[a.degree() + x] = static_cast<Point>(a.degree() + g(x));
    gens.push_back(Permutation(std::move(images)));
  }
  return PermGroup::from_generators(degree, std::move(gens), a.order() * b.order());
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<std::vector<std::size_t>> find_isomorphism(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (element_order_profile(a) != element_order_profile(b)) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  const std::size_t n = a.order();
  std::vector<std::size_t> gens;
  for (const Permutation& g : a.generators()) gens.push_back(a.require_index(g));
  if (gens.empty()) return std::vector<std::size_t>{0};

  std::vector<std::size_t> order_b(n);
  for (std::size_t i = 0; i < n; ++i) order_b[i] = b.element(i).order();

  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> inverse_map(n);

  auto try_extend = [&]() -> bool {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::fill(map.begin(), map.end(), kUnset);
    std::fill(inverse_map.begin(), inverse_map.end(), kUnset);
    map[0] = 0;
    inverse_map[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t y = a.multiply(x, gens[k]);
        std::size_t fy = b.multiply(map[x], images[k]);
        if (map[y] == kUnset) {
          if (inverse_map[fy] != kUnset) return false;
          map[y] = fy;
          inverse_map[fy] = y;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return queue.size() == n;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == gens.size()) return try_extend();
    std::size_t want = a.element(gens[k]).order();
    for (std::size_t c = 0; c < n; ++c) {
      if (order_b[c] != want) continue;
      images[k] = c;
      if (assign(k + 1)) return true;
    }
    return false;
  };
  if (assign(0)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Families

PermGroup trivial_group(std::size_t degree) {
  return PermGroup::from_generators(degree, {});
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return trivial_group(std::max<std::size_t>(n, 1));
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += (i > 1 ? "," : "") + std::to_string(i);
  cycle += ")";
  return PermGroup::from_generators(
      n, {Permutation::from_cycles(n, "(1,2)"), Permutation::from_cycles(n, cycle)});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return trivial_group(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) {
    gens.push_back(Permutation::from_cycles(n, "(1,2," + std::to_string(k) + ")"));
  }
  return PermGroup::from_generators(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n < 2) return trivial_group(1);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators(n, {Permutation(std::move(images))});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "dihedral family D<n> on n points needs n >= 3");
  std::vector<Point> rot(n);
  std::vector<Point> ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup::from_generators(n, {Permutation(std::move(rot)), Permutation(std::move(ref))});
}

PermGroup dicyclic_group(std::size_t order) {
  if (order < 4 || order % 4 != 0) throw Error(ErrorCode::InvalidArgument, "dicyclic order must be a multiple of 4");
  const std::size_t m = order / 4;
  const std::size_t r = 2 * m;  // order of a
  // Element a^k x^j has index k + r*j.
  std::vector<std::size_t> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t k = u % r, j = u / r, l = v % r, i = v / r;
      std::size_t kk;
      std::size_t jj = (j + i) % 2;
      if (j == 0) {
        kk = (k + l) % r;
      } else if (i == 0) {
        kk = (k + r - l) % r;  // x a^l = a^-l x
      } else {
        kk = (k + r - l + m) % r;  // x a^l x = a^-l x^2 = a^(m-l)
      }
      table[u * order + v] = kk + r * jj;
    }
  }
  return PermGroup::from_cayley_table(order, table);
}

PermGroup abelian_group(std::span<const std::size_t> invariants) {
  PermGroup result = trivial_group(1);
  bool first = true;
  for (std::size_t d : invariants) {
    if (d < 2) continue;
    PermGroup c = cyclic_group(d);
    result = first ? c : direct_product(result, c);
    first = false;
  }
  return result;
}

namespace {

std::string abelian_name(std::span<const std::size_t> invariants) {
  if (invariants.empty()) return "1";
  std::string out;
  for (std::size_t d : invariants) {
    if (!out.empty()) out += " x ";
    out += "Z" + std::to_string(d);
  }
  return out;
}

// Frobenius group Z_p : Z_(p-1) acting on p points (x -> x+1, x -> g x).
PermGroup affine_group(std::size_t p, std::size_t multiplier) {
  std::vector<Point> shift(p);
  std::vector<Point> scale(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>((x * multiplier) % p);
  }
  return PermGroup::from_generators(p, {Permutation(std::move(shift)), Permutation(std::move(scale))});
}

struct NamedGroup {
  std::string name;
  std::function<PermGroup()> build;
};

const std::vector<NamedGroup>& reference_groups() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> g;
    g.push_back({"S3", [] { return symmetric_group(3); }});
    g.push_back({"Q8", [] { return dicyclic_group(8); }});
    g.push_back({"A4", [] { return alternating_group(4); }});
    g.push_back({"Dic3", [] { return dicyclic_group(12); }});
    g.push_back({"F20", [] { return affine_group(5, 2); }});
    g.push_back({"F21", [] { return PermGroup::from_generators(7, {Permutation::from_cycles(7, "(1,2,3,4,5,6,7)"),
                                                                     Permutation::from_cycles(7, "(2,3,5)(4,7,6)")}); }});
    g.push_back({"F42", [] { return affine_group(7, 3); }});
    g.push_back({"S4", [] { return symmetric_group(4); }});
    g.push_back({"Z2 x S3", [] { return direct_product(cyclic_group(2), symmetric_group(3)); }});
    g.push_back({"Z2 x A4", [] { return direct_product(cyclic_group(2), alternating_group(4)); }});
    g.push_back({"Z2 x S4", [] { return direct_product(cyclic_group(2), symmetric_group(4)); }});
    g.push_back({"Z3 x S3", [] { return direct_product(cyclic_group(3), symmetric_group(3)); }});
    g.push_back({"S3 x S3", [] { return direct_product(symmetric_group(3), symmetric_group(3)); }});
    g.push_back({"A5", [] { return alternating_group(5); }});
    g.push_back({"S5", [] { return symmetric_group(5); }});
    for (std::size_t n = 4; n <= 32; ++n) {
      g.push_back({"D" + std::to_string(n), [n] { return dihedral_group(n); }});
    }
    for (std::size_t order = 16; order <= 64; order += 4) {
      g.push_back({"Dic" + std::to_string(order / 4), [order] { return dicyclic_group(order); }});
    }
    return g;
  }();
  return groups;
}

}  // namespace

std::string group_name(const PermGroup& group) {
  const std::size_t n = group.order();
  if (group.is_abelian()) {
    return abelian_name(abelian_invariants(element_order_profile(group)));
  }
  // D3 is listed as S3 and D6 as Z2 x S3 only when no dihedral name applies;
  // dihedral names take precedence for orders 2n with n >= 4.
  std::vector<const NamedGroup*> candidates;
  for (const NamedGroup& ref : reference_groups()) candidates.push_back(&ref);
  std::stable_sort(candidates.begin(), candidates.end(), [](const NamedGroup* a, const NamedGroup* b) {
    return (a->name[0] == 'D' && a->name[1] != 'i') > (b->name[0] == 'D' && b->name[1] != 'i');
  });
  if (n <= 120) {
    for (const NamedGroup* ref : candidates) {
      PermGroup r = ref->build();
      if (r.order() != n) continue;
      if (find_isomorphism(group, r)) return ref->name;
    }
  }
  return "nonabelian group of order " + std::to_string(n);
}

PermGroup parse_group_spec(std::string_view spec, std::optional<std::size_t> degree) {
  while (!spec.empty() && spec.front() == ' ') spec.remove_prefix(1);
  while (!spec.empty() && spec.back() == ' ') spec.remove_suffix(1);
  if (spec.empty()) throw Error(ErrorCode::ParseError, "empty group specification");
  auto embed = [&](const PermGroup& g) {
    if (!degree || *degree == g.degree()) return g;
    if (*degree < g.degree()) {
      throw Error(ErrorCode::InvalidArgument, std::string(spec) + " does not fit in degree " + std::to_string(*degree));
    }
    std::vector<Permutation> gens;
    for (const Permutation& x : g.generators()) gens.push_back(x.extended(*degree));
    return PermGroup::from_generators(*degree, std::move(gens));
  };
  if (auto cross = spec.find(" x "); cross != std::string_view::npos) {
    PermGroup product = direct_product(parse_group_spec(spec.substr(0, cross)), parse_group_spec(spec.substr(cross + 3)));
    return embed(product);
  }
  if (spec.front() == '[' || spec.front() == '(' || spec.front() == '<') {
    std::string_view body = spec;
    if (body.front() == '[' || body.front() == '<') {
      char close = body.front() == '[' ? ']' : '>';
      if (body.back() != close) throw Error(ErrorCode::ParseError, "unterminated generator list");
      body = body.substr(1, body.size() - 2);
    }
    // Split on top-level commas between ')' and '('.
    std::vector<std::string> cycles;
    std::string current;
    int depth = 0;
    std::size_t max_point = 1;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        cycles.push_back(current);
        current.clear();
        continue;
      }
      if (c == ' ' && depth == 0) continue;
      current += c;
    }
    if (!current.empty()) cycles.push_back(current);
    for (const std::string& cyc : cycles) {
      std::string digits;
      bool compact = cyc.find(',') == std::string::npos;
      for (char c : cyc) {
        if (c >= '0' && c <= '9') {
          if (compact) {
            max_point = std::max<std::size_t>(max_point, static_cast<std::size_t>(c - '0'));
          } else {
            digits += c;
          }
        } else if (!digits.empty()) {
          max_point = std::max<std::size_t>(max_point, std::stoul(digits));
          digits.clear();
        }
      }
      if (!digits.empty()) max_point = std::max<std::size_t>(max_point, std::stoul(digits));
    }
    std::size_t deg = degree.value_or(max_point);
    std::vector<Permutation> gens;
    for (const std::string& cyc : cycles) gens.push_back(Permutation::from_cycles(deg, cyc));
    return PermGroup::from_generators(deg, std::move(gens));
  }
  std::string_view family = spec.substr(0, 1);
  std::string_view number = spec.substr(1);
  if (spec == "1" || spec == "trivial") return trivial_group(degree.value_or(1));
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), n);
  if (ec != std::errc() || ptr != number.data() + number.size() || n == 0) {
    throw Error(ErrorCode::ParseError, "unrecognized group specification '" + std::string(spec) + "'");
  }
  if (family == "S") return embed(symmetric_group(n));
  if (family == "A") return embed(alternating_group(n));
  if (family == "C" || family == "Z") return embed(cyclic_group(n));
  if (family == "D") return embed(dihedral_group(n));
  if (family == "Q") return embed(dicyclic_group(n));
  throw Error(ErrorCode::ParseError, "unrecognized group family in '" + std::string(spec) + "'");
}

}  // namespace fusionlab
