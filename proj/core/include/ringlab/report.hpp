#pragma once

#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  bool members = false;    // include subset member lists
  bool witnesses = false;  // include per-element decomposition witnesses
  bool timing = false;     // include per-predicate durations
};

/// Serializable classification report for one ring.
struct ReportDocument {
  std::string label;
  std::string expression;
  int order = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> element_names;

  struct SubsetLine {
    std::string name;
    int size = 0;
    std::vector<Elem> members;  // filled only with ReportOptions::members
  };
  std::vector<SubsetLine> subsets;

  std::vector<FlagValue> flags;

  struct WitnessLine {
    Elem element = 0;
    bool found = false;
    Elem idempotent = 0;
    Elem part = 0;
    bool commutes = false;
  };
  std::vector<WitnessLine> witnesses;

  ReportOptions options;
  int max_order = 0;
};

ReportDocument make_report(const FiniteRing& ring, const SubsetProfile& profile,
                           const ClassificationReport& classification,
                           const std::string& expression, const ReportOptions& opts,
                           const Config& cfg);

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);  // single JSON object

std::string render_suite_text(const SuiteRun& run);
std::string render_suite_json(const SuiteRun& run);  // line-delimited records

}  // namespace ringlab
