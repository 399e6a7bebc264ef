#ifndef SMTEVAL_METRICS_TER_HPP
#define SMTEVAL_METRICS_TER_HPP

#include <cstdint>
#include <span>

#include "smteval/metrics/eval_pair.hpp"

namespace smteval::metrics {

struct TerReport {
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;
  std::int64_t shifts = 0;
  std::int64_t reference_length = 0;
  double score = 0.0;  // 100 * edits / reference_length

  std::int64_t edits() const { return insertions + deletions + substitutions + shifts; }
};

/// Translation edit rate. A shift moves a contiguous candidate block (at
/// most 10 tokens, and it must occur verbatim somewhere in the reference)
/// to another position at the cost of one edit; remaining edits are
/// unit-cost insertions/deletions/substitutions. Sentences up to 8 tokens
/// a side are solved by exhaustive search over shift sequences; longer
/// ones use the usual greedy loop that repeatedly takes the shift with
/// the largest edit-distance reduction. With several references the one
/// needing the fewest edits wins and provides the normalizing length.
/// Throws EmptyInputError when a reference is empty.
TerReport ter(const EvalPair& pair);

/// Summed edit counters over pairs, normalized by summed reference length.
TerReport ter_corpus(std::span<const EvalPair> pairs);

}  // namespace smteval::metrics

#endif
