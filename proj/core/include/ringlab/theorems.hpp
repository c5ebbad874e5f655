#pragma once

#include <string>
#include <vector>

#include "ringlab/corpus.hpp"

namespace ringlab {

enum class CaseStatus { Pass, Fail, Vacuous };

/// Outcome of one registered identity over the corpus. A failure carries a
/// witness (ring label plus the elements involved) sufficient to re-run
/// the violated identity by hand.
struct CaseResult {
  std::string id;
  std::string statement;
  CaseStatus status = CaseStatus::Vacuous;
  int scope_size = 0;
  std::string witness;  // empty unless status == Fail
};

/// Per-ring observations that are recorded, not asserted.
struct RingFinding {
  std::string label;
  bool delta_equals_jacobson = false;
  bool sdc_without_strongly_j_clean = false;
};

struct SuiteRun {
  std::vector<CaseResult> cases;
  std::vector<RingFinding> findings;
};

struct SuiteOptions {
  std::string case_filter = "*";  // glob over case ids ('*' and '?')
  int jobs = 1;                   // case-level parallelism
  bool include_demo_failure = false;  // register the deliberately false demo case
};

/// (id, statement) of every registered case, in evaluation order.
std::vector<std::pair<std::string, std::string>> theorem_catalog();

/// Evaluates every registered case against the corpus. Results are in
/// registration order regardless of `jobs`; failures are results, not
/// errors.
SuiteRun run_theorem_suite(const Corpus& corpus, const SuiteOptions& opts = {});

/// Formats the stored witness of a failed case; throws
/// Error(InvalidArgument) when the case did not fail.
std::string explain_failure(const CaseResult& result);

/// Simple glob match with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace ringlab
