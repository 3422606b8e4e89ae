#include "fusionlab/verdict.hpp"

#include <map>
#include <mutex>
#include <optional>

#include "fusionlab/bicross.hpp"
#include "fusionlab/chartab.hpp"
#include "fusionlab/error.hpp"

namespace fusionlab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return "SOLVABLE";
    case Verdict::NotSolvable: return "NOT_SOLVABLE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct CatalogEntry::State {
  std::function<TypeSignature()> make_type;
  std::function<FusionRing()> make_ring;
  std::once_flag type_once, ring_once;
  TypeSignature type;
  FusionRing ring;
};

CatalogEntry::CatalogEntry(std::string name, std::function<TypeSignature()> type, std::function<FusionRing()> ring)
    : name_(std::move(name)), state_(std::make_shared<State>()) {
  state_->make_type = std::move(type);
  state_->make_ring = std::move(ring);
}

const TypeSignature& CatalogEntry::type() const {
  std::call_once(state_->type_once, [this] { state_->type = state_->make_type(); });
  return state_->type;
}

const FusionRing& CatalogEntry::ring() const {
  std::call_once(state_->ring_once, [this] { state_->ring = state_->make_ring(); });
  return state_->ring;
}

namespace {

CatalogEntry symmetric_entry(std::size_t n) {
  return CatalogEntry(
      "Rep S" + std::to_string(n),
      [n] {
        std::vector<long> degrees = character_table(symmetric_group(n)).degrees;
        std::map<long, std::size_t> counts;
        for (long d : degrees) ++counts[d];
        TypeSignature t;
        for (auto [d, c] : counts) t.entries.emplace_back(d, c);
        return t;
      },
      [n] { return rep_g_fusion_ring(character_table(symmetric_group(n))); });
}

CatalogEntry pair_entry(std::string name, std::function<MatchedPair()> make) {
  return CatalogEntry(
      std::move(name), [make] { return split_type(make()); }, [make] { return split_fusion_ring(make()); });
}

}  // namespace

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    for (std::size_t n = 5; n <= 7; ++n) c.push_back(symmetric_entry(n));
    c.push_back(pair_entry("J5", [] { return pair_j(5); }));
    c.push_back(pair_entry("K5", [] { return pair_k(5); }));
    c.push_back(pair_entry("J7", [] { return pair_j(7); }));
    c.push_back(pair_entry("K7", [] { return pair_k(7); }));
    c.push_back(pair_entry("H5", [] { return pair_h(5); }));
    c.push_back(pair_entry("L5", [] { return pair_l(5); }));
    c.push_back(pair_entry("B5", [] { return pair_b(5); }));
    c.push_back(pair_entry("B6", [] { return pair_b(6); }));
    c.push_back(pair_entry("B5*", [] { return pair_b_dual(5); }));
    return c;
  }();
  return catalog;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

SolvabilityVerdict solvability_verdict(const FusionRing& ring, const std::vector<CatalogEntry>& catalog,
                                       std::uint64_t node_budget) {
  SolvabilityVerdict out;
  auto record = [&](std::string rule, bool fired, std::string why, std::string ref, Verdict v = Verdict::Unknown) {
    out.trace.push_back({std::move(rule), fired, std::move(why), std::move(ref)});
    if (fired) out.verdict = v;
    return fired;
  };

  if (record("R1", ring.rank() == 1, ring.rank() == 1 ? "ring has rank 1" : "rank is " + std::to_string(ring.rank()),
             "the trivial category is solvable", Verdict::Solvable)) {
    return out;
  }

  InvertibleGroup inv = invertibles(ring);
  if (record("R2", inv.order() == 1,
             inv.order() == 1 ? "only the unit is invertible" : "invertible group " + inv.name + " of order " + std::to_string(inv.order()),
             "a nontrivial solvable fusion category has a nontrivial invertible object", Verdict::NotSolvable)) {
    return out;
  }

  const bool cyc = is_cyclically_nilpotent(ring);
  if (record("R3", cyc, cyc ? "ring is cyclically nilpotent" : "ring is not cyclically nilpotent",
             "cyclically nilpotent categories are solvable", Verdict::Solvable)) {
    return out;
  }

  FPDims dims = fp_dims(ring);
  {
    std::string why = "global dimension is not twice an integer n >= 3";
    bool fired = false;
    if (dims.integral && dims.global_exact % 2 == 0 && dims.global_exact >= 6) {
      const std::size_t n = static_cast<std::size_t>(dims.global_exact / 2);
      const std::size_t dn_rank = n % 2 == 1 ? (n + 3) / 2 : (n + 6) / 2;
      if (ring.rank() != dn_rank) {
        why = "rank differs from Rep D" + std::to_string(n);
      } else {
        try {
          fired = find_equivalence(ring, rep_g_fusion_ring(character_table(dihedral_group(n))), node_budget).has_value();
          why = fired ? "Grothendieck equivalent to Rep D" + std::to_string(n) : "not Grothendieck equivalent to Rep D" + std::to_string(n);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
          why = "comparison with Rep D" + std::to_string(n) + " exceeded the search budget";
        }
      }
    }
    if (record("R4", fired, why, "fusion categories with the fusion rules of Rep D_n are solvable", Verdict::Solvable)) return out;
  }

  {
    const std::size_t p = inv.order();
    bool has_p = false;
    if (dims.integral) {
      for (long d : dims.exact) has_p = has_p || d == static_cast<long>(p);
    }
    const bool fired = is_prime(p) && inv.group.is_abelian() && dims.integral && !has_p;
    std::string why = "invertible group " + inv.name;
    if (!is_prime(p)) {
      why += " does not have prime order";
    } else if (has_p) {
      why += ", and a simple of dimension " + std::to_string(p) + " exists";
    } else if (!dims.integral) {
      why += ", dimensions not integral";
    } else {
      why += " is cyclic of prime order, no simple of dimension " + std::to_string(p) + ", not cyclically nilpotent";
    }
    if (record("R5", fired, why,
               "a solvable category with invertibles Z_p and no simple of dimension p would be cyclically nilpotent",
               Verdict::NotSolvable)) {
      return out;
    }
  }

  {
    const TypeSignature type = type_signature(dims);
    const bool fired = dims.integral && type == TypeSignature::parse("(1,3; 3,1; 4,3)");
    if (record("R6", fired, fired ? "type is (1,3; 3,1; 4,3)" : "type is not (1,3; 3,1; 4,3)",
               "no solvable fusion category has type (1,3; 3,1; 4,3)", Verdict::NotSolvable)) {
      return out;
    }
  }

  {
    std::string why = "no catalog ring shares the type";
    bool fired = false;
    if (dims.integral) {
      const TypeSignature type = type_signature(dims);
      std::vector<std::string> tried;
      for (const CatalogEntry& entry : catalog) {
        if (!(entry.type() == type)) continue;
        try {
          if (find_equivalence(ring, entry.ring(), node_budget)) {
            fired = true;
            out.matched = entry.name();
            why = "Grothendieck equivalent to " + entry.name();
            break;
          }
          tried.push_back(entry.name());
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
          tried.push_back(entry.name() + " (budget exceeded)");
        }
      }
      if (!fired && !tried.empty()) {
        why = "same type but not equivalent:";
        for (const auto& t : tried) why += " " + t;
      }
    }
    if (record("R7", fired, why, "the catalog rings are fusion rules of non-solvable categories only", Verdict::NotSolvable)) {
      return out;
    }
  }

  {
    const bool pointed = inv.order() == ring.rank();
    bool solvable = false;
    std::string why = "ring is not pointed";
    if (pointed) {
      solvable = structure_invariants(inv.group).is_solvable;
      why = "pointed with invertible group " + inv.name + (solvable ? ", which is solvable" : ", which is not solvable");
    }
    if (record("R8", pointed, why, "a pointed category is solvable iff its group is solvable",
               solvable ? Verdict::Solvable : Verdict::NotSolvable)) {
      return out;
    }
  }
  return out;
}

}  // namespace fusionlab
