#include "smteval/stats/icc.hpp"

#include <cmath>

#include "smteval/errors.hpp"

namespace smteval::stats {

IccReport icc_two_way_absolute(const std::vector<std::vector<double>>& matrix) {
  const std::size_t n = matrix.size();
  if (n < 2) throw StatsError("icc: need at least 2 subjects");
  const std::size_t k = matrix.front().size();
  if (k < 2) throw StatsError("icc: need at least 2 raters");
  for (const auto& row : matrix) {
    if (row.size() != k) throw StatsError("icc: incomplete matrix");
  }

  double grand = 0.0;
  std::vector<double> row_mean(n, 0.0), col_mean(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      grand += matrix[i][j];
      row_mean[i] += matrix[i][j];
      col_mean[j] += matrix[i][j];
    }
  }
  grand /= static_cast<double>(n * k);
  for (auto& m : row_mean) m /= static_cast<double>(k);
  for (auto& m : col_mean) m /= static_cast<double>(n);

  double ss_total = 0.0, ss_rows = 0.0, ss_cols = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ss_rows += (row_mean[i] - grand) * (row_mean[i] - grand);
    for (std::size_t j = 0; j < k; ++j) {
      ss_total += (matrix[i][j] - grand) * (matrix[i][j] - grand);
    }
  }
  ss_rows *= static_cast<double>(k);
  for (std::size_t j = 0; j < k; ++j) ss_cols += (col_mean[j] - grand) * (col_mean[j] - grand);
  ss_cols *= static_cast<double>(n);
  const double ss_err = ss_total - ss_rows - ss_cols;

  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  const double ms_rows = ss_rows / (nd - 1.0);
  const double ms_cols = ss_cols / (kd - 1.0);
  const double ms_err = ss_err / ((nd - 1.0) * (kd - 1.0));

  IccReport report;
  const double denom_single = ms_rows + (kd - 1.0) * ms_err + (kd / nd) * (ms_cols - ms_err);
  const double denom_average = ms_rows + (ms_cols - ms_err) / nd;
  if (denom_single == 0.0 || denom_average == 0.0) {
    throw StatsError("icc: undefined for data without variance");
  }
  report.icc_single = (ms_rows - ms_err) / denom_single;
  report.icc_average = (ms_rows - ms_err) / denom_average;
  return report;
}

}  // namespace smteval::stats
