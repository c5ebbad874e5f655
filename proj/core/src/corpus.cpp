#include "ringlab/corpus.hpp"

#include <fstream>
#include <sstream>

#include "ringlab/error.hpp"

namespace ringlab {

const CorpusEntry* Corpus::find(const std::string& label) const {
  for (const CorpusEntry& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

const std::vector<std::pair<std::string, std::string>>& standard_corpus_recipes() {
  static const std::vector<std::pair<std::string, std::string>> recipes = {
      {"0", "Z(1)"},
      {"F2", "F(2)"},
      {"F3", "F(3)"},
      {"F4", "F(4)"},
      {"Z4", "Z(4)"},
      {"Z6", "Z(6)"},
      {"Z8", "Z(8)"},
      {"Z9", "Z(9)"},
      {"Z16", "Z(16)"},
      {"F2xF2", "prod(F(2), F(2))"},
      {"Z2xZ4", "prod(Z(2), Z(4))"},
      {"T2(F2)", "T(2, F(2))"},
      {"T3(F2)", "T(3, F(2))"},
      {"T2(Z4)", "T(2, Z(4))"},
      {"M2(F2)", "M(2, F(2))"},
      {"M2(Z4)", "M(2, Z(4))"},
      {"T(F2,F2)", "TE(F(2))"},
      {"T(Z4,Z4)", "TE(Z(4))"},
      {"T(F2,F2^2)", "TE2(F(2))"},
      {"MoritaR1", "morita(R1)"},
      {"MoritaR2", "morita(R2)"},
      {"MoritaR1N", "morita(R1N)"},
      {"MoritaR2N", "morita(R2N)"},
      {"MoritaFull", "morita(M2Z4)"},
      {"MoritaZ4F4", "morita(Z4F4)"},
      {"F2[C2]", "GR(F(2), C2)"},
      {"F2[C4]", "GR(F(2), C4)"},
      {"F2[C2xC2]", "GR(F(2), C2xC2)"},
      {"Z4[C2]", "GR(Z(4), C2)"},
      {"F2[C3]", "GR(F(2), C3)"},
      {"F4[C2]", "GR(F(4), C2)"},
      {"Z4[C3]", "GR(Z(4), C3)"},
      {"F2[C5]", "GR(F(2), C5)"},
      {"F2[S3]", "GR(F(2), S3)"},
      {"T2(F2)[C2]", "GR(T(2, F(2)), C2)"},
  };
  return recipes;
}

CorpusEntry make_corpus_entry(const std::string& label, const std::string& expression,
                              const Config& cfg) {
  CorpusEntry entry;
  entry.label = label;
  const RingExpr parsed = parse_expr(expression);
  entry.expression = print_expr(parsed);
  EvalResult eval = eval_expr(parsed, cfg);
  entry.ring = std::move(eval.ring);
  entry.meta = std::move(eval.meta);
  entry.ring.set_label(label);
  entry.ring.revalidate();
  entry.profile = SubsetProfile::compute(entry.ring);
  entry.flags = compute_classification(entry.ring, entry.profile, cfg);
  return entry;
}

Corpus standard_corpus(const Config& cfg) {
  Corpus corpus;
  corpus.config = cfg;
  for (const auto& [label, expression] : standard_corpus_recipes())
    corpus.entries.push_back(make_corpus_entry(label, expression, cfg));
  return corpus;
}

Corpus corpus_from_file(const std::string& path, const Config& cfg) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open corpus file '" + path + "'");

  Corpus corpus;
  corpus.config = cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      raise(ErrorKind::IoError, path + ":" + std::to_string(lineno) +
                                    ": expected 'label<TAB>expression'");
    const std::string label = line.substr(0, tab);
    const std::string expression = line.substr(tab + 1);
    if (label.empty() || expression.empty())
      raise(ErrorKind::IoError,
            path + ":" + std::to_string(lineno) + ": empty label or expression");
    corpus.entries.push_back(make_corpus_entry(label, expression, cfg));
  }
  return corpus;
}

}  // namespace ringlab
