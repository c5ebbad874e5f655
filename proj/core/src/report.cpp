#include "ringlab/report.hpp"

#include <json.hpp>

namespace ringlab {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* status_str(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

std::string flag_str(const FlagValue& f) {
  if (!f.value) return "skipped (" + f.skip_reason + ")";
  return *f.value ? "true" : "false";
}

}  // namespace

ReportDocument make_report(const FiniteRing& ring, const SubsetProfile& profile,
                           const ClassificationReport& classification,
                           const std::string& expression, const ReportOptions& opts,
                           const Config& cfg) {
  ReportDocument doc;
  doc.label = ring.label();
  doc.expression = expression;
  doc.order = ring.order();
  doc.zero = ring.zero();
  doc.one = ring.one();
  doc.element_names = ring.element_names();
  doc.options = opts;
  doc.max_order = cfg.max_order;

  const auto subset_line = [&](const char* name, const ElemSet& s) {
    ReportDocument::SubsetLine line;
    line.name = name;
    line.size = s.size();
    if (opts.members) line.members = s.elements();
    doc.subsets.push_back(std::move(line));
  };
  subset_line("units", profile.units);
  subset_line("idempotents", profile.idempotents);
  subset_line("nilpotents", profile.nilpotents);
  subset_line("jacobson", profile.jacobson);
  subset_line("delta", profile.delta);
  subset_line("center", profile.center_set);

  doc.flags = classification.flags;

  if (opts.witnesses) {
    doc.witnesses.reserve(classification.witnesses.size());
    for (size_t a = 0; a < classification.witnesses.size(); ++a) {
      ReportDocument::WitnessLine line;
      line.element = static_cast<Elem>(a);
      if (const auto& w = classification.witnesses[a]) {
        line.found = true;
        line.idempotent = w->idempotent;
        line.part = w->part;
        line.commutes = w->commutes;
      }
      doc.witnesses.push_back(line);
    }
  }
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::string out;
  out += "ring: " + doc.label + " (order " + std::to_string(doc.order) + ")\n";
  out += "expression: " + doc.expression + "\n";
  out += "zero: " + doc.element_names[doc.zero] + "  one: " + doc.element_names[doc.one] + "\n";
  out += "subsets:";
  for (const auto& s : doc.subsets)
    out += " |" + s.name + "|=" + std::to_string(s.size);
  out += "\n";
  if (doc.options.members) {
    for (const auto& s : doc.subsets) {
      out += s.name + ": {";
      for (size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += ", ";
        out += doc.element_names[s.members[i]];
      }
      out += "}\n";
    }
  }
  out += "flags:\n";
  for (const auto& f : doc.flags) {
    out += "  " + f.name + ": " + flag_str(f);
    if (doc.options.timing) out += "  (" + std::to_string(f.micros) + "us)";
    out += "\n";
  }
  if (doc.options.witnesses) {
    out += "witnesses (a = e + d, d in Delta, ed = de):\n";
    for (const auto& w : doc.witnesses) {
      out += "  " + doc.element_names[w.element] + " = ";
      if (w.found)
        out += doc.element_names[w.idempotent] + " + " + doc.element_names[w.part] + "\n";
      else
        out += "(no decomposition)\n";
    }
  }
  return out;
}

std::string render_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["ring"] = {{"label", doc.label},
               {"order", doc.order},
               {"zero", doc.zero},
               {"one", doc.one},
               {"expression", doc.expression}};
  if (doc.options.members) j["ring"]["element_names"] = doc.element_names;

  ordered_json subsets;
  for (const auto& s : doc.subsets) {
    if (doc.options.members) {
      ordered_json entry;
      entry["size"] = s.size;
      entry["members"] = s.members;
      subsets[s.name] = entry;
    } else {
      subsets[s.name] = s.size;
    }
  }
  j["subsets"] = subsets;

  ordered_json flags;
  for (const auto& f : doc.flags) {
    if (f.value)
      flags[f.name] = *f.value;
    else
      flags[f.name] = ordered_json{{"skipped", f.skip_reason}};
  }
  j["flags"] = flags;

  if (doc.options.witnesses) {
    ordered_json ws = ordered_json::array();
    for (const auto& w : doc.witnesses) {
      ordered_json entry;
      entry["element"] = w.element;
      entry["found"] = w.found;
      if (w.found) {
        entry["idempotent"] = w.idempotent;
        entry["part"] = w.part;
        entry["commutes"] = w.commutes;
      }
      ws.push_back(entry);
    }
    j["witnesses"] = ws;
  }

  if (doc.options.timing) {
    ordered_json timing;
    for (const auto& f : doc.flags) timing[f.name] = f.micros;
    j["timings_us"] = timing;
  }

  j["provenance"] = {{"expression", doc.expression}, {"max_order", doc.max_order}};
  return j.dump(2) + "\n";
}

std::string render_suite_text(const SuiteRun& run) {
  std::string out;
  int pass = 0, fail = 0, vacuous = 0;
  for (const CaseResult& c : run.cases) {
    std::string line;
    switch (c.status) {
      case CaseStatus::Pass:
        ++pass;
        line = "PASS  ";
        break;
      case CaseStatus::Fail:
        ++fail;
        line = "FAIL  ";
        break;
      case CaseStatus::Vacuous:
        ++vacuous;
        line = "VACUO ";
        break;
    }
    line += c.id;
    if (line.size() < 60) line.append(60 - line.size(), ' ');
    line += " scope=" + std::to_string(c.scope_size);
    out += line + "\n";
    if (c.status == CaseStatus::Fail) out += explain_failure(c);
  }
  int delta_eq = 0, sdc_not_sjc = 0;
  for (const RingFinding& f : run.findings) {
    delta_eq += f.delta_equals_jacobson ? 1 : 0;
    sdc_not_sjc += f.sdc_without_strongly_j_clean ? 1 : 0;
  }
  out += "findings: Delta(R)=J(R) on " + std::to_string(delta_eq) + "/" +
         std::to_string(run.findings.size()) + " rings; strongly Delta-clean without strongly "
         "J-clean on " +
         std::to_string(sdc_not_sjc) + "/" + std::to_string(run.findings.size()) + " rings\n";
  out += "summary: " + std::to_string(run.cases.size()) + " cases | " + std::to_string(pass) +
         " pass | " + std::to_string(fail) + " fail | " + std::to_string(vacuous) +
         " vacuous\n";
  return out;
}

std::string render_suite_json(const SuiteRun& run) {
  std::string out;
  int pass = 0, fail = 0, vacuous = 0;
  for (const CaseResult& c : run.cases) {
    ordered_json j;
    j["type"] = "case";
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["scope"] = c.scope_size;
    j["result"] = status_str(c.status);
    if (c.status == CaseStatus::Fail)
      j["witness"] = c.witness;
    else
      j["witness"] = nullptr;
    out += j.dump() + "\n";
    pass += c.status == CaseStatus::Pass ? 1 : 0;
    fail += c.status == CaseStatus::Fail ? 1 : 0;
    vacuous += c.status == CaseStatus::Vacuous ? 1 : 0;
  }
  for (const RingFinding& f : run.findings) {
    ordered_json j;
    j["type"] = "finding";
    j["ring"] = f.label;
    j["delta_equals_jacobson"] = f.delta_equals_jacobson;
    j["sdc_without_strongly_j_clean"] = f.sdc_without_strongly_j_clean;
    out += j.dump() + "\n";
  }
  ordered_json summary;
  summary["type"] = "summary";
  summary["schema_version"] = kReportSchemaVersion;
  summary["cases"] = run.cases.size();
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["vacuous"] = vacuous;
  out += summary.dump() + "\n";
  return out;
}

}  // namespace ringlab
