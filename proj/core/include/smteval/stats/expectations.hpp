#ifndef SMTEVAL_STATS_EXPECTATIONS_HPP
#define SMTEVAL_STATS_EXPECTATIONS_HPP

#include <string>
#include <vector>

#include "smteval/stats/score_table.hpp"

namespace smteval::stats {

/// One recomputed statistic checked against its expected value.
struct ExpectationCheck {
  std::string name;
  double value = 0.0;
  std::string expectation;  // human-readable bound, e.g. "82.72 +/- 0.01"
  bool passed = false;
};

/// Recomputes the summary statistics of the two score tables (per-metric
/// means, Wilcoxon matched-pairs findings, the unpaired TER t-test, and
/// quality bands of the BLEU column) and checks each against the expected
/// values recorded in the toolkit. The tables default to the bundled
/// ones; passing others runs the same checks against their values.
std::vector<ExpectationCheck> expectation_checks(const ScoreTable& pl_en,
                                                 const ScoreTable& en_pl);

}  // namespace smteval::stats

#endif
