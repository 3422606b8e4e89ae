#include "fusionlab/document.hpp"

#include <algorithm>

#include "fusionlab/error.hpp"

namespace fusionlab {

namespace {

const std::vector<std::string> kKinds = {"group", "chartab", "fusionring", "matchedpair", "modulardata", "verdict", "witness"};

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Json generators_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Permutation& p : g.generators()) gens.push_back(p.to_cycles());
  return gens;
}

}  // namespace

Json document_to_json(const WorkDocument& doc) {
  return Json{{"schema_version", doc.schema_version}, {"kind", doc.kind}, {"payload", doc.payload}, {"provenance", doc.provenance}};
}

WorkDocument document_from_json(const Json& j) {
  WorkDocument doc;
  doc.schema_version = field<std::string>(j, "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    throw Error(ErrorCode::SchemaMismatch, "schema version " + doc.schema_version + ", expected " + std::string(kSchemaVersion));
  }
  doc.kind = field<std::string>(j, "kind");
  if (std::find(kKinds.begin(), kKinds.end(), doc.kind) == kKinds.end()) {
    throw Error(ErrorCode::SchemaMismatch, "unknown document kind '" + doc.kind + "'");
  }
  doc.payload = j.contains("payload") ? j.at("payload") : Json::object();
  doc.provenance = j.contains("provenance") ? j.at("provenance") : Json::object();
  return doc;
}

std::string print_document(const WorkDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

WorkDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return document_from_json(j);
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    if (c.coeffs()[k] != 0) coeffs.push_back(Json::array({k, rational_to_string(c.coeffs()[k])}));
  }
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  const long n = field<long>(j, "conductor");
  if (n < 1) throw Error(ErrorCode::ParseError, "conductor must be positive");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n), 0);
  for (const Json& term : field<Json>(j, "coeffs")) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !term[1].is_string()) {
      throw Error(ErrorCode::ParseError, "cyclotomic term must be [k, \"p/q\"]");
    }
    const std::size_t k = term[0].get<std::size_t>();
    if (k >= coeffs.size()) throw Error(ErrorCode::ParseError, "exponent out of range");
    coeffs[k] += rational_from_string(term[1].get<std::string>());
  }
  return Cyclotomic::from_exponents(n, coeffs);
}

Json group_to_json(const PermGroup& g) {
  StructureInvariants inv = structure_invariants(g);
  Json classes = Json::array();
  for (const ConjugacyClass& c : conjugacy_classes(g)) {
    classes.push_back(Json{{"representative", c.representative.to_cycles()}, {"size", c.size()}});
  }
  return Json{{"degree", g.degree()},
              {"order", g.order()},
              {"name", group_name(g)},
              {"generators", generators_json(g)},
              {"abelian", g.is_abelian()},
              {"solvable", inv.is_solvable},
              {"nilpotent", inv.is_nilpotent},
              {"center_order", inv.center.order()},
              {"derived_subgroup_order", inv.commutator_subgroup.order()},
              {"abelianization", inv.abelianization_type},
              {"classes", classes}};
}

Json chartab_to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (const ConjugacyClass& c : t.classes) {
    classes.push_back(Json{{"representative", c.representative.to_cycles()}, {"size", c.size()}});
  }
  Json values = Json::array();
  for (const auto& row : t.chars) {
    Json r = Json::array();
    for (const Cyclotomic& v : row) r.push_back(cyclotomic_to_json(v));
    values.push_back(r);
  }
  return Json{{"group", Json{{"degree", t.group.degree()}, {"order", t.group.order()}, {"generators", generators_json(t.group)}}},
              {"classes", classes},
              {"degrees", t.degrees},
              {"exponent", t.exponent},
              {"values", values}};
}

Json fusion_ring_to_json(const FusionRing& ring) {
  Json j{{"labels", ring.labels()}, {"dual", ring.dual()}, {"tensor", ring.tensor()}, {"rank", ring.rank()}};
  FPDims d = fp_dims(ring);
  if (d.integral) j["dims"] = d.exact;
  return j;
}

FusionRing fusion_ring_from_json(const Json& j) {
  auto labels = field<std::vector<std::string>>(j, "labels");
  auto dual = field<std::vector<std::size_t>>(j, "dual");
  auto tensor = field<std::vector<int>>(j, "tensor");
  const std::size_t n = labels.size();
  if (dual.size() != n || tensor.size() != n * n * n) throw Error(ErrorCode::ParseError, "fusion ring sizes are inconsistent");
  for (std::size_t d : dual) {
    if (d >= n) throw Error(ErrorCode::ParseError, "dual index out of range");
  }
  FusionRing ring(std::move(labels), std::move(dual), std::move(tensor));
  validate(ring);
  if (j.contains("dims")) {
    FPDims d = fp_dims(ring);
    if (!d.integral || j.at("dims").get<std::vector<long>>() != d.exact) {
      throw Error(ErrorCode::AxiomViolation, "stored dimensions disagree with the Frobenius-Perron dimensions");
    }
  }
  return ring;
}

Json modular_data_to_json(const ModularData& m, bool with_s, bool with_t) {
  Json j{{"labels", m.labels}, {"rank", m.rank()}};
  Json dims = Json::array();
  for (std::size_t x = 0; x < m.rank(); ++x) dims.push_back(cyclotomic_to_json(m.dim(x)));
  j["dims"] = dims;
  if (with_s) {
    Json s = Json::array();
    for (const auto& row : m.s) {
      Json r = Json::array();
      for (const Cyclotomic& v : row) r.push_back(cyclotomic_to_json(v));
      s.push_back(r);
    }
    j["s"] = s;
  }
  if (with_t) {
    Json t = Json::array();
    for (const Cyclotomic& v : m.t) t.push_back(cyclotomic_to_json(v));
    j["t"] = t;
  }
  if (!m.double_labels.empty()) {
    Json dl = Json::array();
    for (const DoubleLabel& l : m.double_labels) {
      dl.push_back(Json{{"class_rep", l.class_rep.to_cycles()}, {"char_index", l.char_index}, {"dim", l.dim}});
    }
    j["double_labels"] = dl;
  }
  return j;
}

ModularData modular_data_from_json(const Json& j) {
  ModularData m;
  m.labels = field<std::vector<std::string>>(j, "labels");
  if (!j.contains("s") || !j.contains("t")) throw Error(ErrorCode::ParseError, "modular data needs both s and t");
  for (const Json& row : j.at("s")) {
    std::vector<Cyclotomic> r;
    for (const Json& v : row) r.push_back(cyclotomic_from_json(v));
    m.s.push_back(std::move(r));
  }
  for (const Json& v : j.at("t")) m.t.push_back(cyclotomic_from_json(v));
  if (j.contains("double_labels")) {
    std::size_t degree = 0;
    std::vector<std::tuple<std::string, std::size_t, long>> raw;
    for (const Json& l : j.at("double_labels")) {
      raw.emplace_back(field<std::string>(l, "class_rep"), field<std::size_t>(l, "char_index"), field<long>(l, "dim"));
    }
    // Degree: the largest point mentioned in any class representative.
    for (const auto& entry : raw) {
      std::size_t cur = 0;
      for (char c : std::get<0>(entry)) {
        cur = (c >= '0' && c <= '9') ? cur * 10 + static_cast<std::size_t>(c - '0') : 0;
        degree = std::max(degree, cur);
      }
    }
    for (const auto& [cycles, idx, dim] : raw) {
      m.double_labels.push_back({Permutation::from_cycles(std::max<std::size_t>(degree, 1), cycles), idx, dim});
    }
  }
  verify_modular_data(m);
  return m;
}

Json matched_pair_to_json(const MatchedPair& mp, const SplitIrreps* irreps) {
  Json j{{"ambient", Json{{"order", mp.ambient.order()}, {"generators", generators_json(mp.ambient)}, {"name", group_name(mp.ambient)}}},
         {"f", Json{{"order", mp.f.order()}, {"generators", generators_json(mp.f)}}},
         {"gamma", Json{{"order", mp.gamma.order()}, {"generators", generators_json(mp.gamma)}}},
         {"dim", mp.f.order() * mp.gamma.order()}};
  if (irreps) {
    Json list = Json::array();
    for (const ExtIrrep& w : irreps->irreps) {
      list.push_back(Json{{"label", w.label},
                          {"orbit_rep", mp.gamma.element(w.orbit_rep).to_cycles()},
                          {"orbit_size", w.orbit.size()},
                          {"stabilizer_order", w.stabilizer.order()},
                          {"stab_char", w.stab_char},
                          {"dim", w.dim}});
    }
    j["irreps"] = list;
    j["type"] = irreps->type.to_string();
  }
  return j;
}

Json dual_invertibles_to_json(const DualInvertibles& d) {
  return Json{{"order", d.group.order()},
              {"name", d.name},
              {"character_count", d.character_count},
              {"fixed_points", d.fixed_points.size()},
              {"center_order", d.center_order},
              {"table", d.table}};
}

Json verdict_to_json(const SolvabilityVerdict& v) {
  Json trace = Json::array();
  for (const RuleEvaluation& r : v.trace) {
    trace.push_back(Json{{"rule", r.rule}, {"fired", r.fired}, {"justification", r.justification}, {"reference", r.reference}});
  }
  Json j{{"verdict", verdict_name(v.verdict)}, {"trace", trace}};
  if (!v.matched.empty()) j["matched"] = v.matched;
  return j;
}

Json witness_to_json(const std::vector<std::string>& labels_a, const std::vector<std::string>& labels_b,
                     const std::optional<std::vector<std::size_t>>& witness) {
  Json j{{"found", witness.has_value()}};
  if (witness) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < witness->size(); ++i) pairs.push_back(Json::array({labels_a[i], labels_b[(*witness)[i]]}));
    j["witness"] = pairs;
  }
  return j;
}

}  // namespace fusionlab
