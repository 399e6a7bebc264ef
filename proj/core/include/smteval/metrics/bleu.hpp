#ifndef SMTEVAL_METRICS_BLEU_HPP
#define SMTEVAL_METRICS_BLEU_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "smteval/metrics/eval_pair.hpp"

namespace smteval::metrics {

struct BleuReport {
  double score = 0.0;               // in [0,1]
  std::vector<double> precisions;   // clipped n-gram precisions p_1..p_N
  std::vector<double> weights;      // w_1..w_N, sum to 1
  double brevity_penalty = 1.0;
  std::int64_t candidate_length = 0;
  std::int64_t reference_length = 0;  // effective: per pair the closest, ties to shorter
  int max_order = 4;
};

enum class BleuLevel {
  /// Precisions pooled over the corpus, score 0 when any pooled precision
  /// is 0 (no smoothing).
  Corpus,
  /// Geometric mean of per-sentence scores, zero numerators smoothed with
  /// 0.1 pseudo-counts; orders longer than the candidate are skipped with
  /// the weights renormalized.
  SentenceGeometric,
};

/// Corpus BLEU. Candidate n-gram credit is clipped per pair by the
/// maximum count in any single reference; the brevity penalty is 1 when
/// c > r and exp(1 - r/c) otherwise. Default weights are uniform 1/N.
/// Throws EmptyInputError for an empty pair list, RangeError for bad
/// weights or order.
BleuReport bleu(std::span<const EvalPair> pairs, int max_order = 4,
                std::span<const double> weights = {}, BleuLevel level = BleuLevel::Corpus);

}  // namespace smteval::metrics

#endif
