#pragma once

#include <string>

#include "ringlab/corpus.hpp"
#include "ringlab/expr.hpp"

namespace ringlab::testing {

/// One shared standard corpus per test binary; entries are immutable.
inline const Corpus& shared_corpus() {
  static const Corpus corpus = standard_corpus(Config{});
  return corpus;
}

inline FiniteRing build(const std::string& expression) {
  return eval_expr(parse_expr(expression), Config{}).ring;
}

inline EvalResult build_full(const std::string& expression) {
  return eval_expr(parse_expr(expression), Config{});
}

}  // namespace ringlab::testing
