#ifndef SMTEVAL_STATS_TESTS_HPP
#define SMTEVAL_STATS_TESTS_HPP

#include <span>
#include <string>

namespace smteval::stats {

struct SignificanceReport {
  std::string test;
  double statistic = 0.0;
  double p_value = 1.0;
  double effect = 0.0;          // mean difference
  double standard_error = 0.0;  // of the mean difference
  double alpha = 0.05;
  bool significant = false;     // p_value < alpha
};

/// Wilcoxon matched-pairs signed-rank test. Zero differences are dropped,
/// tied magnitudes get average ranks. The two-sided p-value is exact (by
/// enumerating sign assignments) up to n = 25 and a normal approximation
/// with continuity and tie correction beyond. Throws DimensionError on
/// length mismatch, StatsError when fewer than 5 non-zero differences
/// remain.
SignificanceReport wilcoxon_matched_pairs(std::span<const double> x, std::span<const double> y,
                                          double alpha = 0.05);

enum class TTestMode { Paired, UnpairedPooled };

/// Student t-test, two-sided. Paired mode requires equal lengths;
/// unpaired uses the pooled-variance statistic with n1+n2-2 degrees of
/// freedom. Throws DimensionError or StatsError when the preconditions
/// fail.
SignificanceReport t_test(std::span<const double> x, std::span<const double> y, TTestMode mode,
                          double alpha = 0.05);

}  // namespace smteval::stats

#endif
