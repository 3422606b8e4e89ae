#include "fusionlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "fusionlab/bicross.hpp"
#include "fusionlab/chartab.hpp"
#include "fusionlab/document.hpp"
#include "fusionlab/moddata.hpp"
#include "fusionlab/suite.hpp"
#include "fusionlab/verdict.hpp"

namespace fusionlab {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaMismatch:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::ClosureTooLarge:
      return kExitBudget;
    case ErrorCode::NotExactFactorization:
    case ErrorCode::AxiomViolation:
    case ErrorCode::NotAutomorphism:
    case ErrorCode::SingularS:
    case ErrorCode::LengthMismatch:
    case ErrorCode::DivisionByZero:
    case ErrorCode::Unsupported:
      return kExitRejected;
    case ErrorCode::LiftFailure:
    case ErrorCode::NonIntegralMultiplicity:
    case ErrorCode::NoPositiveEigenvector:
    case ErrorCode::GradingInconsistent:
    case ErrorCode::GroupLawFailure:
    case ErrorCode::SingularCharacterSystem:
    case ErrorCode::InvariantFailure:
      return kExitInternal;
  }
  return kExitInternal;
}

namespace {

constexpr std::size_t kBowtieLimit = 1000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

// rep:<group>, group:<group>, bicross:<pair>, verlinde:<group>, or a
// fusionring document file.
FusionRing load_ring(const std::string& arg) {
  if (starts_with(arg, "rep:")) return rep_g_fusion_ring(character_table(parse_group_spec(arg.substr(4))));
  if (starts_with(arg, "group:")) return group_ring(parse_group_spec(arg.substr(6)));
  if (starts_with(arg, "bicross:")) return split_fusion_ring(parse_pair_spec(arg.substr(8)));
  if (starts_with(arg, "verlinde:")) return verlinde_fusion(double_modular_data(parse_group_spec(arg.substr(9))));
  WorkDocument doc = parse_document(read_file(arg));
  if (doc.kind != "fusionring") throw Error(ErrorCode::SchemaMismatch, arg + " holds a " + doc.kind + " document, not fusionring");
  return fusion_ring_from_json(doc.payload);
}

// double:<group> or a modulardata document file.
ModularData load_modular(const std::string& arg) {
  if (starts_with(arg, "double:")) return double_modular_data(parse_group_spec(arg.substr(7)));
  WorkDocument doc = parse_document(read_file(arg));
  if (doc.kind != "modulardata") throw Error(ErrorCode::SchemaMismatch, arg + " holds a " + doc.kind + " document, not modulardata");
  return modular_data_from_json(doc.payload);
}

void report(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  CLI::App app{"Fusion rings, character tables, bicrossed products and Drinfeld doubles", "fusionlab"};
  app.require_subcommand(1);

  std::string command_line = "fusionlab";
  for (const auto& a : args) command_line += " " + a;
  Json provenance{{"command", command_line}, {"library_version", std::string(kLibraryVersion)}};

  std::function<int()> action;
  auto emit = [&](const std::string& kind, Json payload, Json extra = Json::object()) {
    WorkDocument doc;
    doc.kind = kind;
    doc.payload = std::move(payload);
    doc.provenance = provenance;
    for (auto& [k, v] : extra.items()) doc.provenance[k] = v;
    out << print_document(doc);
    return kExitOk;
  };

  std::string spec_a, spec_b, spec_c;

  auto* group = app.add_subcommand("group", "Group structure summary");
  group->add_option("group", spec_a, "S<n>, A<n>, C<n>, D<n>, Q<n> or a generator list")->required();
  group->callback([&] { action = [&] { return emit("group", group_to_json(parse_group_spec(spec_a))); }; });

  auto* chartab = app.add_subcommand("chartab", "Character table");
  chartab->add_option("group", spec_a)->required();
  chartab->callback([&] {
    action = [&] {
      CharacterTable t = character_table(parse_group_spec(spec_a));
      return emit("chartab", chartab_to_json(t), Json{{"dixon_prime", t.prime}});
    };
  });

  auto* repring = app.add_subcommand("repring", "Fusion ring of Rep G");
  repring->add_option("group", spec_a)->required();
  repring->callback([&] {
    action = [&] { return emit("fusionring", fusion_ring_to_json(rep_g_fusion_ring(character_table(parse_group_spec(spec_a))))); };
  });

  auto* pair = app.add_subcommand("pair", "Matched pair from an exact factorization G = F Gamma");
  pair->add_option("G", spec_a)->required();
  pair->add_option("F", spec_b)->required();
  pair->add_option("Gamma", spec_c)->required();
  pair->callback([&] {
    action = [&] {
      PermGroup g = parse_group_spec(spec_a);
      MatchedPair mp = matched_pair_from_factorization(g, parse_group_spec(spec_b, g.degree()), parse_group_spec(spec_c, g.degree()));
      SplitIrreps irreps = split_irreps(mp);
      Json payload = matched_pair_to_json(mp, &irreps);
      if (g.order() <= kBowtieLimit) payload["bowtie_isomorphic"] = bowtie_group(mp).order() == g.order();
      return emit("matchedpair", payload);
    };
  });

  bool want_ring = false, want_type = false, want_dual = false;
  auto* bicross = app.add_subcommand("bicross", "Representations of the split bicrossed product k^Gamma # kF");
  bicross->add_option("pair", spec_a, "\"(Gamma,F in G)\" or J<n>, K<n>, H<n>, L<n>, B<n>, B<n>*")->required();
  auto* ring_flag = bicross->add_flag("--ring", want_ring, "Full fusion ring");
  auto* type_flag = bicross->add_flag("--type", want_type, "Type only");
  auto* dual_flag = bicross->add_flag("--dual-invertibles", want_dual, "Group of one-dimensional representations of the dual");
  ring_flag->excludes(type_flag)->excludes(dual_flag);
  type_flag->excludes(dual_flag);
  bicross->callback([&] {
    action = [&] {
      MatchedPair mp = parse_pair_spec(spec_a);
      if (want_ring) return emit("fusionring", fusion_ring_to_json(split_fusion_ring(mp)));
      if (want_type) {
        Json payload = matched_pair_to_json(mp);
        payload["type"] = split_type(mp).to_string();
        return emit("matchedpair", payload);
      }
      if (want_dual) return emit("group", dual_invertibles_to_json(dual_invertibles(mp)));
      SplitIrreps irreps = split_irreps(mp);
      return emit("matchedpair", matched_pair_to_json(mp, &irreps));
    };
  });

  bool only_s = false, only_t = false;
  auto* dbl = app.add_subcommand("double", "Modular data of the Drinfeld double D(G)");
  dbl->add_option("group", spec_a)->required();
  auto* s_flag = dbl->add_flag("--smatrix", only_s, "S matrix only");
  auto* t_flag = dbl->add_flag("--tmatrix", only_t, "T matrix only");
  s_flag->excludes(t_flag);
  dbl->callback([&] {
    action = [&] {
      ModularData md = double_modular_data(parse_group_spec(spec_a));
      Json payload = modular_data_to_json(md, !only_t, !only_s);
      if (only_s || only_t) payload["partial"] = true;
      return emit("modulardata", payload);
    };
  });

  auto* verlinde = app.add_subcommand("verlinde", "Fusion ring from modular data");
  verlinde->add_option("modulardata", spec_a, "document file or double:<group>")->required();
  verlinde->callback([&] { action = [&] { return emit("fusionring", fusion_ring_to_json(verlinde_fusion(load_modular(spec_a)))); }; });

  auto* analyze = app.add_subcommand("analyze", "Nilpotency, type, invertibles and solvability verdict");
  analyze->add_option("ring", spec_a, "document file, rep:<group>, group:<group>, bicross:<pair> or verlinde:<group>")->required();
  analyze->callback([&] {
    action = [&] {
      FusionRing ring = load_ring(spec_a);
      FPDims dims = fp_dims(ring);
      InvertibleGroup inv = invertibles(ring);
      Json payload = verdict_to_json(solvability_verdict(ring, default_catalog(), options.node_budget));
      payload["rank"] = ring.rank();
      payload["type"] = dims.integral ? type_signature(dims).to_string() : "non-integral";
      payload["global_dim"] = dims.integral ? Json(dims.global_exact) : Json(nullptr);
      payload["invertibles"] = Json{{"order", inv.order()}, {"name", inv.name}};
      payload["universal_grading_order"] = universal_grading(ring).order();
      payload["nilpotent"] = is_nilpotent(ring);
      payload["cyclically_nilpotent"] = is_cyclically_nilpotent(ring);
      return emit("verdict", payload);
    };
  });

  auto* equiv = app.add_subcommand("equiv", "Grothendieck equivalence search");
  equiv->add_option("ring1", spec_a)->required();
  equiv->add_option("ring2", spec_b)->required();
  equiv->callback([&] {
    action = [&] {
      FusionRing a = load_ring(spec_a), b = load_ring(spec_b);
      auto w = find_equivalence(a, b, options.node_budget);
      Json payload = witness_to_json(a.labels(), b.labels(), w);
      if (w) {
        PropertyReport r = verify_properties(a, b, *w);
        payload["properties"] = Json{{"tensor", r.tensor}, {"dims", r.dims}, {"invertibles", r.invertibles},
                                     {"duals", r.duals}, {"adjoint_series", r.adjoint_series}, {"grading_group", r.grading_group}};
        if (!r.all()) throw Error(ErrorCode::InvariantFailure, "witness fails a derived property");
      }
      return emit("witness", payload);
    };
  });

  auto* sequiv = app.add_subcommand("sequiv", "S-equivalence search between modular data");
  sequiv->add_option("md1", spec_a)->required();
  sequiv->add_option("md2", spec_b)->required();
  sequiv->callback([&] {
    action = [&] {
      ModularData a = load_modular(spec_a), b = load_modular(spec_b);
      return emit("witness", witness_to_json(a.labels, b.labels, s_equivalence(a, b, options.node_budget)));
    };
  });

  auto* suite = app.add_subcommand("paper-suite", "Run the reproduction table");
  suite->callback([&] {
    action = [&] {
      bool ok = true;
      run_reproduction_suite(options.node_budget, [&](const CriterionResult& r) {
        out << format_result(r) << std::endl;
        ok = ok && r.pass;
      });
      return ok ? kExitOk : kExitInternal;
    };
  });

  std::vector<std::string> owned;
  owned.reserve(args.size() + 1);
  owned.push_back("fusionlab");
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "USAGE", e.what());
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    report(err, std::string(error_code_name(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    report(err, "PARSE_ERROR", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report(err, "INTERNAL", e.what());
    return kExitInternal;
  }
}

}  // namespace fusionlab
