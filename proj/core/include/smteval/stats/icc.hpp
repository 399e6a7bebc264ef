#ifndef SMTEVAL_STATS_ICC_HPP
#define SMTEVAL_STATS_ICC_HPP

#include <string>
#include <vector>

namespace smteval::stats {

struct IccReport {
  double icc_single = 0.0;   // ICC(A,1)
  double icc_average = 0.0;  // ICC(A,k)
  std::string model = "two-way, absolute agreement";
};

/// Intraclass correlation for a complete subjects x raters matrix under
/// the two-way absolute-agreement model:
///
///   ICC(A,1) = (MS_R - MS_E) / (MS_R + (k-1) MS_E + (k/n)(MS_C - MS_E))
///   ICC(A,k) = (MS_R - MS_E) / (MS_R + (MS_C - MS_E)/n)
///
/// Throws StatsError for ragged or too-small matrices and for degenerate
/// data without any variance (the coefficient is undefined there).
IccReport icc_two_way_absolute(const std::vector<std::vector<double>>& matrix);

}  // namespace smteval::stats

#endif
