#include <doctest.h>

#include "ringlab/classify.hpp"
#include "ringlab/error.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::build;
using ringlab::testing::shared_corpus;

namespace {

const Config kCfg{};

Classification classify_expr(const char* expr) {
  const FiniteRing r = build(expr);
  return compute_classification(r, SubsetProfile::compute(r), kCfg);
}

}  // namespace

TEST_CASE("Z4 profile") {
  const Classification c = classify_expr("Z(4)");
  CHECK(c.strongly_delta_clean);
  CHECK(c.strongly_j_clean);
  CHECK(c.strongly_nil_clean);
  CHECK(c.uniquely_clean);
  CHECK(c.uniquely_delta_clean);
  CHECK(c.delta_u);
  CHECK(c.local);
  CHECK(c.residue_f2);
  CHECK(c.bleached == std::optional<bool>(true));
  CHECK_FALSE(c.boolean_ring);
  CHECK_FALSE(c.reduced);
  CHECK(c.two_primal);
  CHECK(c.delta_equals_jacobson);
}

TEST_CASE("boolean product") {
  const Classification c = classify_expr("prod(F(2), F(2))");
  CHECK(c.boolean_ring);
  CHECK(c.strongly_delta_clean);
  CHECK(c.uniquely_clean);
  CHECK(c.semisimple);
  CHECK(c.reduced);
  CHECK(c.abelian);
  CHECK_FALSE(c.local);
  CHECK_FALSE(c.division);
}

TEST_CASE("T2(F2) is strongly Delta-clean but not uniquely clean") {
  const Classification c = classify_expr("T(2, F(2))");
  CHECK(c.strongly_delta_clean);
  CHECK_FALSE(c.uniquely_clean);
  CHECK_FALSE(c.uniquely_delta_clean);
  CHECK_FALSE(c.abelian);
  CHECK(c.two_primal);
  CHECK(c.quasi_duo_right == std::optional<bool>(true));
  CHECK(c.quasi_duo_left == std::optional<bool>(true));
  CHECK_FALSE(c.local);
}

TEST_CASE("matrix rings fail the Delta-clean family") {
  const Classification c = classify_expr("M(2, F(2))");
  CHECK_FALSE(c.strongly_delta_clean);
  CHECK_FALSE(c.delta_u);
  CHECK_FALSE(c.two_primal);
  CHECK(c.quasi_duo_right == std::optional<bool>(false));
  CHECK(c.quasi_duo_left == std::optional<bool>(false));
  CHECK(c.dedekind_finite);
  CHECK(c.semisimple);
  CHECK(c.strongly_clean);  // finite rings always are
  CHECK_FALSE(c.bleached.has_value());  // not local, so skipped
}

TEST_CASE("Z6 splits off a factor of odd order") {
  const Classification c = classify_expr("Z(6)");
  CHECK_FALSE(c.strongly_delta_clean);
  CHECK(c.clean);
  CHECK(c.strongly_clean);
  CHECK_FALSE(c.uniquely_clean);
  CHECK(c.semisimple);
}

TEST_CASE("Z9 is local with the wrong residue field") {
  const Classification c = classify_expr("Z(9)");
  CHECK(c.local);
  CHECK_FALSE(c.residue_f2);
  CHECK_FALSE(c.strongly_delta_clean);
}

TEST_CASE("the one-element ring") {
  const Classification c = classify_expr("Z(1)");
  CHECK(c.boolean_ring);
  CHECK(c.strongly_delta_clean);
  CHECK(c.semisimple);
  CHECK_FALSE(c.local);
  CHECK_FALSE(c.division);
}

TEST_CASE("bleached is only defined on local rings") {
  const FiniteRing m2 = build("M(2, F(2))");
  CHECK_THROWS_AS(is_bleached_local(m2, SubsetProfile::compute(m2)), Error);
  const FiniteRing te = build("TE(F(2))");
  CHECK(is_bleached_local(te, SubsetProfile::compute(te)));
}

TEST_CASE("quasi-duo degrades to skipped above budget") {
  CHECK(is_quasi_duo(build("prod(F(2), F(2))"), Side::Right, 2) == std::nullopt);
}

TEST_CASE("witness search is deterministic and ascending") {
  const FiniteRing z4 = zmod_ring(4);
  const SdcScan scan = sdc_elements(z4, SubsetProfile::compute(z4));
  CHECK(scan.all);
  REQUIRE(scan.witness[3].has_value());
  CHECK(scan.witness[3]->idempotent == 1);  // 3 = 1 + 2 with 2 in Delta
  CHECK(scan.witness[3]->part == 2);
  CHECK(scan.witness[3]->commutes);
  REQUIRE(scan.witness[2].has_value());
  CHECK(scan.witness[2]->idempotent == 0);
}

TEST_CASE("classification reports carry every flag in stable order") {
  const FiniteRing z4 = zmod_ring(4);
  const SubsetProfile p = SubsetProfile::compute(z4);
  const ClassificationReport report = classify(z4, p, kCfg);
  REQUIRE(report.flags.size() == flag_names().size());
  for (size_t i = 0; i < report.flags.size(); ++i)
    CHECK(report.flags[i].name == flag_names()[i]);
  CHECK(report.units_size == 2);
  CHECK(report.delta_size == 2);

  ClassifyOptions opts;
  opts.witnesses = true;
  const ClassificationReport with_witnesses = classify(z4, p, kCfg, opts);
  REQUIRE(with_witnesses.witnesses.size() == 4);
  CHECK(with_witnesses.witnesses[3].has_value());
}

TEST_CASE("flag lookup rejects unknown names") {
  Classification c;
  CHECK_THROWS_AS(flag_by_name(c, "no_such_flag"), Error);
  CHECK(flag_by_name(c, "boolean") == std::optional<bool>(false));
}

TEST_CASE("flag implication chain across the corpus") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    const Classification& c = e.flags;
    if (c.strongly_j_clean) CHECK(c.strongly_delta_clean);
    if (c.strongly_delta_clean) CHECK(c.strongly_clean);
    if (c.strongly_clean) CHECK(c.clean);
    if (c.strongly_delta_clean) CHECK(c.delta_u);
    if (c.strongly_nil_clean) CHECK(c.nil_clean);
    if (c.boolean_ring) CHECK(c.strongly_delta_clean);
    if (c.uniquely_clean) CHECK(c.strongly_delta_clean);
  }
}
