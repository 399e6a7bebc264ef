#ifndef SMTEVAL_METRICS_METEOR_HPP
#define SMTEVAL_METRICS_METEOR_HPP

#include <cstdint>
#include <span>

#include "smteval/metrics/eval_pair.hpp"

namespace smteval::metrics {

struct MeteorReport {
  std::int64_t matches = 0;
  std::int64_t chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double score = 0.0;  // fmean * (1 - penalty), in [0,1]
  std::int64_t candidate_length = 0;
  std::int64_t reference_length = 0;  // of the best-scoring reference
};

/// Exact-match METEOR: aligns identical tokens one-to-one, maximizing the
/// match count and then minimizing the number of chunks (runs of matches
/// adjacent in both sentences). fmean = 10PR/(R+9P), penalty =
/// 0.5 (chunks/matches)^3. With several references the best-scoring one
/// wins. Zero matches give score 0.
MeteorReport meteor(const EvalPair& pair);

/// Corpus score from aggregated statistics: per pair the best reference's
/// matches/chunks/lengths are summed, then the same formulas apply.
MeteorReport meteor_corpus(std::span<const EvalPair> pairs);

}  // namespace smteval::metrics

#endif
