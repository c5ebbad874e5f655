#pragma once

#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/config.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

/// One ring of the verification corpus: label, recipe, tables, cached
/// subset profile and predicate values, and construction provenance.
struct CorpusEntry {
  std::string label;
  std::string expression;
  FiniteRing ring;
  SubsetProfile profile;
  Classification flags;
  EvalMeta meta;
};

struct Corpus {
  Config config;
  std::vector<CorpusEntry> entries;

  const CorpusEntry* find(const std::string& label) const;
};

/// (label, expression) pairs of the built-in corpus.
const std::vector<std::pair<std::string, std::string>>& standard_corpus_recipes();

/// Builds and fully validates the standard corpus. Every ring passes the
/// exhaustive axiom scan exactly once here.
Corpus standard_corpus(const Config& cfg);

/// Line-oriented corpus file: "label<TAB>expression"; blank lines and
/// lines starting with '#' are ignored. Throws Error(IoError) when the
/// file cannot be read.
Corpus corpus_from_file(const std::string& path, const Config& cfg);

/// Shared entry pipeline: evaluate, revalidate, profile, classify.
CorpusEntry make_corpus_entry(const std::string& label, const std::string& expression,
                              const Config& cfg);

}  // namespace ringlab
