#include <doctest.h>

#include <json.hpp>

#include "ringlab/report.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::build;

namespace {

const Config kCfg{};

ReportDocument document_for(const char* expression, ReportOptions opts = {}) {
  const FiniteRing ring = build(expression);
  const SubsetProfile profile = SubsetProfile::compute(ring);
  ClassifyOptions copts;
  copts.witnesses = opts.witnesses;
  const ClassificationReport report = classify(ring, profile, kCfg, copts);
  return make_report(ring, profile, report, expression, opts, kCfg);
}

}  // namespace

TEST_CASE("json reports survive a parse and re-serialize round trip") {
  ReportOptions opts;
  opts.members = true;
  opts.witnesses = true;
  for (const char* expr : {"Z(4)", "M(2, F(2))", "T(2, F(2))"}) {
    const std::string rendered = render_json(document_for(expr, opts));
    const auto parsed = nlohmann::ordered_json::parse(rendered);
    CHECK(parsed.dump(2) + "\n" == rendered);
    CHECK(parsed["schema_version"] == kReportSchemaVersion);
    CHECK(parsed["ring"]["order"].is_number());
    CHECK(parsed["flags"].size() == flag_names().size());
    CHECK(parsed["subsets"].size() == 6);
    CHECK(parsed["provenance"]["expression"] == expr);
  }
}

TEST_CASE("text and json agree on every flag") {
  const ReportDocument doc = document_for("T(2, Z(4))");
  const std::string text = render_text(doc);
  const auto parsed = nlohmann::ordered_json::parse(render_json(doc));
  for (const std::string& flag : flag_names()) {
    const auto& j = parsed["flags"][flag];
    if (!j.is_boolean()) continue;  // skipped flags render as objects
    const std::string needle = "  " + flag + ": " + (j.get<bool>() ? "true" : "false");
    CHECK(text.find(needle) != std::string::npos);
  }
}

TEST_CASE("suite rendering carries one record per case plus findings and summary") {
  SuiteOptions opts;
  opts.case_filter = "sdc-two-in-radical";
  const SuiteRun run = run_theorem_suite(ringlab::testing::shared_corpus(), opts);
  REQUIRE(run.cases.size() == 1);

  const std::string text = render_suite_text(run);
  CHECK(text.find("PASS  sdc-two-in-radical") != std::string::npos);
  CHECK(text.find("summary: 1 cases | 1 pass | 0 fail | 0 vacuous") != std::string::npos);

  const std::string jsonl = render_suite_json(run);
  size_t lines = 0;
  for (char c : jsonl) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 1 + run.findings.size() + 1);  // case + findings + summary
  const auto first = nlohmann::ordered_json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(first["type"] == "case");
  CHECK(first["id"] == "sdc-two-in-radical");
  CHECK(first["result"] == "pass");
  CHECK(first["witness"].is_null());
}

TEST_CASE("witness lines name the decomposition") {
  ReportOptions opts;
  opts.witnesses = true;
  const ReportDocument doc = document_for("Z(4)", opts);
  const std::string text = render_text(doc);
  CHECK(text.find("3 = 1 + 2") != std::string::npos);
}
