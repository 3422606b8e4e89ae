#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fusionlab/bicross.hpp"
#include "fusionlab/cli.hpp"
#include "fusionlab/document.hpp"
#include "fusionlab/moddata.hpp"

using namespace fusionlab;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args, RunOptions options = {}) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err, options);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fusionlab_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string first_error(const Outcome& o) {
  std::istringstream lines(o.err);
  std::string line;
  std::getline(lines, line);
  return Json::parse(line).at("error").get<std::string>();
}

}  // namespace

TEST_CASE("documents survive print, parse, print unchanged") {
  const std::vector<std::vector<std::string>> commands = {
      {"group", "S4"},
      {"chartab", "A5"},
      {"repring", "S4"},
      {"pair", "S5", "C5", "S4"},
      {"bicross", "K5"},
      {"bicross", "K5", "--ring"},
      {"bicross", "(A4,C5 in A5)", "--type"},
      {"bicross", "J5", "--dual-invertibles"},
      {"double", "S3"},
      {"double", "S3", "--smatrix"},
      {"verlinde", "double:S3"},
      {"analyze", "rep:S5"},
      {"equiv", "rep:D4", "rep:Q8"},
      {"sequiv", "double:S3", "double:S3"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.front());
    Outcome o = invoke(cmd);
    REQUIRE(o.code == kExitOk);
    CHECK(o.err.empty());
    WorkDocument doc = parse_document(o.out);
    CHECK(doc.schema_version == "1");
    CHECK(print_document(doc) == o.out);
    CHECK(document_from_json(document_to_json(doc)) == doc);
    CHECK(invoke(cmd).out == o.out);
  }
}

TEST_CASE("fusion ring and modular data files load back") {
  Outcome ring = invoke({"bicross", "L5", "--ring"});
  REQUIRE(ring.code == kExitOk);
  WorkDocument doc = parse_document(ring.out);
  CHECK(doc.kind == "fusionring");
  CHECK(fusion_ring_from_json(doc.payload) == split_fusion_ring(pair_l(5)));
  const std::string path = write_file("l5.json", ring.out);
  Outcome verdict = invoke({"analyze", path});
  REQUIRE(verdict.code == kExitOk);
  Json v = parse_document(verdict.out).payload;
  CHECK(v.at("verdict") == "NOT_SOLVABLE");
  CHECK(v.at("type") == "(1,3; 3,1; 4,3)");
  CHECK(invoke({"equiv", path, "bicross:L5"}).code == kExitOk);

  Outcome md = invoke({"double", "S3"});
  REQUIRE(md.code == kExitOk);
  const std::string md_path = write_file("ds3.json", md.out);
  CHECK(parse_document(invoke({"verlinde", md_path}).out).payload == parse_document(invoke({"verlinde", "double:S3"}).out).payload);
  Json witness = parse_document(invoke({"sequiv", md_path, "double:S3"}).out).payload;
  CHECK(witness.at("found") == true);
}

TEST_CASE("command results") {
  Json k5 = parse_document(invoke({"analyze", "bicross:K5"}).out).payload;
  CHECK(k5.at("verdict") == "NOT_SOLVABLE");
  CHECK(k5.at("matched") == "K5");
  CHECK(k5.at("invertibles").at("name") == "D5");
  CHECK(k5.at("type") == "(1,10; 5,2)");

  Json dq = parse_document(invoke({"equiv", "rep:D4", "rep:Q8"}).out).payload;
  CHECK(dq.at("found") == true);
  CHECK(dq.at("properties").at("grading_group") == true);
  CHECK(parse_document(invoke({"equiv", "rep:Z4", "rep:Z2 x Z2"}).out).payload.at("found") == false);

  Json pair = parse_document(invoke({"pair", "S5", "C5", "S4"}).out).payload;
  CHECK(pair.at("bowtie_isomorphic") == true);

  Json dual = parse_document(invoke({"bicross", "B5", "--dual-invertibles"}).out).payload;
  CHECK(dual.at("order") == 12);

  Json partial = parse_document(invoke({"double", "Z2", "--tmatrix"}).out).payload;
  CHECK(partial.at("partial") == true);
  CHECK_FALSE(partial.contains("s"));
}

TEST_CASE("exit codes and diagnostics") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"nonsense"}).code == kExitUsage);
  CHECK(invoke({"double", "S3", "--smatrix", "--tmatrix"}).code == kExitUsage);

  Outcome bad_group = invoke({"group", "X5"});
  CHECK(bad_group.code == kExitUsage);
  CHECK(first_error(bad_group) == "PARSE_ERROR");

  Outcome not_exact = invoke({"pair", "S3", "S3", "S3"});
  CHECK(not_exact.code == kExitRejected);
  CHECK(first_error(not_exact) == "NOT_EXACT_FACTORIZATION");
  CHECK(not_exact.out.empty());

  RunOptions tight;
  tight.node_budget = 1;
  Outcome budget = invoke({"equiv", "group:Z2 x Z2 x Z2 x Z2", "group:Z2 x Z2 x Z2 x Z2"}, tight);
  CHECK(budget.code == kExitBudget);
  CHECK(first_error(budget) == "SEARCH_BUDGET_EXCEEDED");

  Outcome missing = invoke({"analyze", scratch("does_not_exist.json").string()});
  CHECK(missing.code == kExitUsage);

  const std::string garbled = write_file("garbled.json", "{ not json");
  Outcome parse = invoke({"analyze", garbled});
  CHECK(parse.code == kExitUsage);
  CHECK(first_error(parse) == "PARSE_ERROR");

  WorkDocument doc = parse_document(invoke({"repring", "S3"}).out);
  doc.schema_version = "0";
  Outcome schema = invoke({"analyze", write_file("old.json", print_document(doc))});
  CHECK(schema.code == kExitUsage);
  CHECK(first_error(schema) == "SCHEMA_MISMATCH");

  WorkDocument wrong_kind = parse_document(invoke({"group", "S3"}).out);
  CHECK(invoke({"analyze", write_file("group.json", print_document(wrong_kind))}).code == kExitUsage);

  WorkDocument broken = parse_document(invoke({"repring", "S3"}).out);
  broken.payload["tensor"][1] = 1;
  Outcome axiom = invoke({"analyze", write_file("broken.json", print_document(broken))});
  CHECK(axiom.code == kExitRejected);
  CHECK(first_error(axiom) == "AXIOM_VIOLATION");
}
