#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fusionlab/bicross.hpp"
#include "fusionlab/chartab.hpp"
#include "fusionlab/cyclo.hpp"
#include "fusionlab/fusering.hpp"
#include "fusionlab/moddata.hpp"
#include "fusionlab/permcore.hpp"
#include "fusionlab/verdict.hpp"

namespace fusionlab {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kLibraryVersion = "0.1.0";

/// kind is one of group, chartab, fusionring, matchedpair, modulardata,
/// verdict, witness.
struct WorkDocument {
  std::string schema_version{kSchemaVersion};
  std::string kind;
  Json payload;
  Json provenance;

  friend bool operator==(const WorkDocument&, const WorkDocument&) = default;
};

Json document_to_json(const WorkDocument& doc);
/// Throws SCHEMA_MISMATCH on a wrong schema version or unknown kind.
WorkDocument document_from_json(const Json& j);

/// Two-space indented JSON with sorted keys and a trailing newline.
std::string print_document(const WorkDocument& doc);
/// Throws PARSE_ERROR on malformed JSON.
WorkDocument parse_document(std::string_view text);

Json cyclotomic_to_json(const Cyclotomic& c);  // {"conductor": N, "coeffs": [[k, "p/q"], ...]}
Cyclotomic cyclotomic_from_json(const Json& j);

Json group_to_json(const PermGroup& g);
Json chartab_to_json(const CharacterTable& t);

/// labels, dual, flattened tensor N[(i * r + j) * r + k], and dims when integral.
Json fusion_ring_to_json(const FusionRing& ring);
/// Validates the axioms after reading.
FusionRing fusion_ring_from_json(const Json& j);

Json modular_data_to_json(const ModularData& m, bool with_s = true, bool with_t = true);
/// Verifies the modular data invariants after reading.
ModularData modular_data_from_json(const Json& j);

Json matched_pair_to_json(const MatchedPair& mp, const SplitIrreps* irreps = nullptr);
Json dual_invertibles_to_json(const DualInvertibles& d);
Json verdict_to_json(const SolvabilityVerdict& v);
Json witness_to_json(const std::vector<std::string>& labels_a, const std::vector<std::string>& labels_b,
                     const std::optional<std::vector<std::size_t>>& witness);

}  // namespace fusionlab
