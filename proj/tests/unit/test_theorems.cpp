#include <doctest.h>

#include <set>

#include "ringlab/error.hpp"
#include "ringlab/theorems.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::shared_corpus;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("sdc-*", "sdc-two-in-radical"));
  CHECK_FALSE(glob_match("sdc-*", "corner-rings-inherit-sdc"));
  CHECK(glob_match("*morita*", "morita-context-radical-blocks"));
  CHECK(glob_match("?dc-*", "sdc-implies-delta-u"));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("", ""));
}

TEST_CASE("catalog ids are unique") {
  const auto catalog = theorem_catalog();
  CHECK(catalog.size() == 49);
  std::set<std::string> ids;
  for (const auto& [id, statement] : catalog) {
    CHECK(ids.insert(id).second);
    CHECK_FALSE(statement.empty());
  }
}

TEST_CASE("the standard corpus satisfies every registered case") {
  const SuiteRun run = run_theorem_suite(shared_corpus());
  CHECK(run.cases.size() == theorem_catalog().size());
  for (const CaseResult& c : run.cases) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Pass);
    CHECK(c.scope_size > 0);
  }
  CHECK(run.findings.size() == shared_corpus().entries.size());
}

TEST_CASE("case filters select by glob") {
  SuiteOptions opts;
  opts.case_filter = "odd-*";
  const SuiteRun run = run_theorem_suite(shared_corpus(), opts);
  REQUIRE(run.cases.size() == 1);
  CHECK(run.cases[0].id == "odd-order-group-ring-never-sdc");
  CHECK(run.cases[0].scope_size == 3);  // F2[C3], Z4[C3], F2[C5]
}

TEST_CASE("results are identical across parallelism settings") {
  SuiteOptions serial;
  serial.jobs = 1;
  SuiteOptions parallel;
  parallel.jobs = 4;
  const SuiteRun a = run_theorem_suite(shared_corpus(), serial);
  const SuiteRun b = run_theorem_suite(shared_corpus(), parallel);
  REQUIRE(a.cases.size() == b.cases.size());
  for (size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].id == b.cases[i].id);
    CHECK(a.cases[i].status == b.cases[i].status);
    CHECK(a.cases[i].scope_size == b.cases[i].scope_size);
    CHECK(a.cases[i].witness == b.cases[i].witness);
  }
}

TEST_CASE("the demo case fails with an explainable witness") {
  SuiteOptions opts;
  opts.include_demo_failure = true;
  opts.case_filter = "demo-*";
  const SuiteRun run = run_theorem_suite(shared_corpus(), opts);
  REQUIRE(run.cases.size() == 1);
  const CaseResult& demo = run.cases[0];
  CHECK(demo.status == CaseStatus::Fail);
  CHECK_FALSE(demo.witness.empty());

  const std::string trace = explain_failure(demo);
  CHECK(trace.find("demo-false") != std::string::npos);
  CHECK(trace.find("ring=") != std::string::npos);
}

TEST_CASE("explaining a passing case is an error") {
  const SuiteRun run = run_theorem_suite(shared_corpus());
  REQUIRE_FALSE(run.cases.empty());
  CHECK_THROWS_AS(explain_failure(run.cases[0]), Error);
}

TEST_CASE("findings record the radical comparison per ring") {
  const SuiteRun run = run_theorem_suite(shared_corpus());
  for (const RingFinding& f : run.findings) {
    const CorpusEntry* entry = shared_corpus().find(f.label);
    REQUIRE(entry != nullptr);
    CHECK(f.delta_equals_jacobson == (entry->profile.delta == entry->profile.jacobson));
  }
}

TEST_CASE("corpus files mirror the standard pipeline") {
  // A corpus built from expressions joins every applicable case.
  Corpus corpus;
  corpus.config = Config{};
  corpus.entries.push_back(make_corpus_entry("A", "Z(4)", corpus.config));
  corpus.entries.push_back(make_corpus_entry("B", "GR(F(2), C3)", corpus.config));

  SuiteOptions opts;
  opts.case_filter = "odd-order-*";
  const SuiteRun run = run_theorem_suite(corpus, opts);
  REQUIRE(run.cases.size() == 1);
  CHECK(run.cases[0].scope_size == 1);
  CHECK(run.cases[0].status == CaseStatus::Pass);

  opts.case_filter = "morita-*";
  const SuiteRun vacuous = run_theorem_suite(corpus, opts);
  for (const CaseResult& c : vacuous.cases) CHECK(c.status == CaseStatus::Vacuous);
}
