#ifndef SMTEVAL_METRICS_NIST_HPP
#define SMTEVAL_METRICS_NIST_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "smteval/metrics/eval_pair.hpp"

namespace smteval::metrics {

struct NistReport {
  double score = 0.0;
  std::vector<double> info_gains;              // per order: summed info of matches
  std::vector<std::int64_t> candidate_counts;  // per order: candidate n-gram tokens
  double brevity = 1.0;
  std::int64_t candidate_length = 0;
  double mean_reference_length = 0.0;
  int max_order = 5;
};

/// Information-weighted n-gram score. Each n-gram's information is
/// log2(count(prefix)/count(ngram)) over the pooled reference corpus (the
/// empty prefix counts all reference tokens); per pair, matched candidate
/// n-grams are clipped by their maximum single-reference count. The
/// brevity factor exp(beta ln^2 min(1, c/r)) uses beta chosen so that the
/// factor is 0.5 at c/r = 2/3. Throws EmptyInputError on no pairs.
NistReport nist(std::span<const EvalPair> pairs, int max_order = 5);

}  // namespace smteval::metrics

#endif
