// ringlab — classify finite rings, verify the identity suite, and search
// small construction families for a property.
//
// Exit codes: 0 success (verify: all non-vacuous cases pass), 1 internal
// error or verification failure, 2 construction/usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "ringlab/classify.hpp"
#include "ringlab/config.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

namespace {

using namespace ringlab;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  int max_order = 0;  // 0 = take env/default
  bool json = false;
};

Config make_config(const CommonFlags& common) {
  Config cfg = Config::from_env();
  if (common.max_order > 0) cfg.max_order = common.max_order;
  return cfg;
}

int run_classify(const std::string& expr_text, const CommonFlags& common, bool members,
                 bool witnesses, bool timing, bool validate) {
  const Config cfg = make_config(common);
  const RingExpr parsed = parse_expr(expr_text);
  EvalResult eval = eval_expr(parsed, cfg);
  if (validate) eval.ring.revalidate();

  const SubsetProfile profile = SubsetProfile::compute(eval.ring);
  ClassifyOptions copts;
  copts.witnesses = witnesses;
  copts.ideal_budget = cfg.ideal_budget;
  const ClassificationReport report = classify(eval.ring, profile, cfg, copts);

  ReportOptions ropts;
  ropts.members = members;
  ropts.witnesses = witnesses;
  ropts.timing = timing;
  const ReportDocument doc =
      make_report(eval.ring, profile, report, print_expr(parsed), ropts, cfg);
  std::cout << (common.json ? render_json(doc) : render_text(doc));
  return kExitOk;
}

int run_verify(const std::string& corpus_arg, const std::string& case_filter, int jobs,
               const CommonFlags& common, bool with_demo_failure) {
  const Config cfg = make_config(common);
  const Corpus corpus =
      corpus_arg == "standard" ? standard_corpus(cfg) : corpus_from_file(corpus_arg, cfg);

  SuiteOptions opts;
  opts.case_filter = case_filter;
  opts.jobs = jobs;
  opts.include_demo_failure = with_demo_failure;
  const SuiteRun run = run_theorem_suite(corpus, opts);

  std::cout << (common.json ? render_suite_json(run) : render_suite_text(run));
  for (const CaseResult& c : run.cases)
    if (c.status == CaseStatus::Fail) return kExitFailure;
  return kExitOk;
}

int run_search(const std::string& property, const std::string& family, const CommonFlags& common) {
  const Config base_cfg = make_config(common);
  Config cfg = base_cfg;
  const int bound = common.max_order > 0 ? common.max_order : cfg.max_order;
  cfg.max_order = std::max(cfg.max_order, bound);

  {  // fail fast on a bad property name
    Classification probe;
    flag_by_name(probe, property);
  }

  std::vector<std::string> expressions;
  if (family == "zn") {
    for (int n = 2; n <= bound; ++n) expressions.push_back("Z(" + std::to_string(n) + ")");
  } else if (family == "products") {
    // products of F2/Z4 factors within the order bound
    for (int twos = 0; twos <= 9; ++twos)
      for (int fours = 0; fours <= 4; ++fours) {
        if (twos + fours == 0) continue;
        long long order = 1;
        for (int i = 0; i < twos; ++i) order *= 2;
        for (int i = 0; i < fours; ++i) order *= 4;
        if (order > bound) continue;
        if (twos + fours == 1) {
          expressions.push_back(twos ? "F(2)" : "Z(4)");
          continue;
        }
        std::string expr = "prod(";
        bool first = true;
        for (int i = 0; i < twos; ++i) {
          expr += std::string(first ? "" : ", ") + "F(2)";
          first = false;
        }
        for (int i = 0; i < fours; ++i) {
          expr += std::string(first ? "" : ", ") + "Z(4)";
          first = false;
        }
        expressions.push_back(expr + ")");
      }
  } else if (family == "tn") {
    const std::vector<std::string> bases = {"F(2)", "F(3)", "F(4)", "F(5)", "Z(4)",
                                            "Z(6)", "Z(8)", "Z(9)", "Z(16)"};
    for (int n = 2; n <= 3; ++n)
      for (const std::string& b : bases)
        expressions.push_back("T(" + std::to_string(n) + ", " + b + ")");
  } else if (family == "gr") {
    const std::vector<std::string> bases = {"F(2)", "F(3)", "F(4)", "Z(4)", "Z(8)"};
    for (const std::string& b : bases)
      for (const FiniteGroup& g : standard_groups())
        expressions.push_back("GR(" + b + ", " + g.label + ")");
  } else {
    raise(ErrorKind::InvalidArgument,
          "unknown family '" + family + "' (known: zn, products, tn, gr)");
  }

  std::vector<std::pair<std::string, bool>> rows;
  for (const std::string& text : expressions) {
    const RingExpr parsed = parse_expr(text);
    EvalResult eval;
    try {
      eval = eval_expr(parsed, cfg);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::MaxOrderExceeded) continue;
      throw;
    }
    if (eval.ring.order() > bound) continue;
    const SubsetProfile profile = SubsetProfile::compute(eval.ring);
    const Classification c = compute_classification(eval.ring, profile, cfg);
    const auto value = flag_by_name(c, property);
    rows.emplace_back(print_expr(parsed), value.value_or(false));
  }

  std::string holds;
  for (const auto& [expr, value] : rows)
    if (value) holds += (holds.empty() ? "" : ", ") + expr;

  if (common.json) {
    std::string out;
    for (const auto& [expr, value] : rows)
      out += std::string("{\"expression\":\"") + expr + "\",\"" + property + "\":" +
             (value ? "true" : "false") + "}\n";
    std::cout << out;
    std::cout << "{\"type\":\"summary\",\"property\":\"" << property << "\",\"family\":\""
              << family << "\",\"holds\":" << [&] {
                   std::string arr = "[";
                   bool first = true;
                   for (const auto& [expr, value] : rows)
                     if (value) {
                       arr += std::string(first ? "" : ",") + "\"" + expr + "\"";
                       first = false;
                     }
                   return arr + "]";
                 }()
              << "}\n";
  } else {
    for (const auto& [expr, value] : rows) {
      std::string line = expr;
      if (line.size() < 28) line.append(28 - line.size(), ' ');
      std::cout << line << " " << property << "=" << (value ? "true" : "false") << "\n";
    }
    std::cout << "holds: " << (holds.empty() ? "(none)" : holds) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite associative unital rings"};
  app.require_subcommand(1);

  CommonFlags common;

  // classify
  std::string classify_expr;
  bool members = false, witnesses = false, timing = false, validate = false;
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify one constructed ring");
  classify_cmd->add_option("expression", classify_expr, "ring expression, e.g. \"T(2, Z(4))\"")
      ->required();
  bool text_output = false;
  CLI::Option* json_opt = classify_cmd->add_flag("--json", common.json, "machine-readable output");
  classify_cmd->add_flag("--text", text_output, "human-readable output (default)")
      ->excludes(json_opt);
  classify_cmd->add_flag("--members", members, "include subset member lists");
  classify_cmd->add_flag("--witnesses", witnesses, "include per-element decompositions");
  classify_cmd->add_flag("--timing", timing, "include per-predicate timings");
  classify_cmd->add_flag("--validate", validate, "run the exhaustive axiom scan first");
  classify_cmd->add_option("--max-order", common.max_order, "override the maximum ring order");

  // verify
  std::string corpus_arg = "standard";
  std::string case_filter = "*";
  int jobs = 1;
  bool with_demo_failure = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suite over a corpus");
  verify_cmd->add_option("--corpus", corpus_arg,
                         "'standard' or a corpus file (label<TAB>expression per line)");
  verify_cmd->add_option("--case-filter", case_filter, "glob over case ids");
  verify_cmd->add_option("--jobs", jobs, "evaluate cases in parallel");
  verify_cmd->add_flag("--json", common.json, "line-delimited machine-readable output");
  verify_cmd->add_flag("--with-demo-failure", with_demo_failure,
                       "also run the deliberately failing demo case");
  verify_cmd->add_option("--max-order", common.max_order, "override the maximum ring order");

  // search
  std::string property, family = "zn";
  CLI::App* search_cmd =
      app.add_subcommand("search", "evaluate a property over a family of constructions");
  search_cmd->add_option("--property", property, "flag name, e.g. strongly_delta_clean")
      ->required();
  search_cmd->add_option("--within", family, "family: zn | products | tn | gr");
  search_cmd->add_flag("--json", common.json, "machine-readable output");
  search_cmd->add_option("--max-order", common.max_order, "order bound for the family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed())
      return run_classify(classify_expr, common, members, witnesses, timing, validate);
    if (verify_cmd->parsed())
      return run_verify(corpus_arg, case_filter, jobs, common, with_demo_failure);
    if (search_cmd->parsed()) return run_search(property, family, common);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ringlab::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    switch (err.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::MaxOrderExceeded:
      case ErrorKind::NotAnIdeal:
      case ErrorKind::NotIdempotent:
      case ErrorKind::InvalidArgument:
      case ErrorKind::UnknownProperty:
      case ErrorKind::IoError:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
