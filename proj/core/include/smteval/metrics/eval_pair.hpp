#ifndef SMTEVAL_METRICS_EVAL_PAIR_HPP
#define SMTEVAL_METRICS_EVAL_PAIR_HPP

#include <vector>

#include "smteval/text/corpus.hpp"

namespace smteval::metrics {

using text::TokenizedSentence;

/// A candidate translation with its reference translations (at least one),
/// all tokenized by the same pipeline.
struct EvalPair {
  TokenizedSentence candidate;
  std::vector<TokenizedSentence> references;
};

}  // namespace smteval::metrics

#endif
