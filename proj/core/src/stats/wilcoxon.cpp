#include "smteval/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "smteval/errors.hpp"

namespace smteval::stats {

namespace {

constexpr std::size_t kExactLimit = 25;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// average ranks of |d|, plus the tie-group sizes for the variance
// correction of the normal approximation
std::vector<double> average_ranks(const std::vector<double>& magnitudes,
                                  std::vector<std::int64_t>& tie_sizes) {
  const std::size_t n = magnitudes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return magnitudes[a] < magnitudes[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && magnitudes[order[j + 1]] == magnitudes[order[i]]) ++j;
    const double avg = static_cast<double>(i + 1 + j + 1) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    tie_sizes.push_back(static_cast<std::int64_t>(j - i + 1));
    i = j + 1;
  }
  return ranks;
}

// exact two-sided p-value: the signed-rank statistic's null distribution
// via a subset-sum count over doubled ranks (integers even with ties)
double exact_p(const std::vector<double>& ranks, double w_min) {
  std::size_t total = 0;
  std::vector<std::size_t> doubled(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    doubled[i] = static_cast<std::size_t>(std::llround(2.0 * ranks[i]));
    total += doubled[i];
  }
  std::vector<double> count(total + 1, 0.0);
  count[0] = 1.0;
  for (const std::size_t r : doubled) {
    for (std::size_t s = total; s + 1 > r; --s) {
      if (count[s - r] != 0.0) count[s] += count[s - r];
    }
  }
  const auto limit = static_cast<std::size_t>(std::llround(2.0 * w_min));
  double tail = 0.0;
  for (std::size_t s = 0; s <= limit && s <= total; ++s) tail += count[s];
  const double p = 2.0 * tail / std::pow(2.0, static_cast<double>(ranks.size()));
  return std::min(1.0, p);
}

double approx_p(const std::vector<double>& ranks, const std::vector<std::int64_t>& tie_sizes,
                double w_min) {
  const auto n = static_cast<double>(ranks.size());
  const double mu = n * (n + 1.0) / 4.0;
  double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  for (const auto t : tie_sizes) {
    const auto td = static_cast<double>(t);
    var -= (td * td * td - td) / 48.0;
  }
  if (var <= 0.0) return 1.0;
  const double z = (w_min - mu + 0.5) / std::sqrt(var);
  return std::min(1.0, 2.0 * normal_cdf(z));
}

}  // namespace

SignificanceReport wilcoxon_matched_pairs(std::span<const double> x, std::span<const double> y,
                                          double alpha) {
  if (x.size() != y.size()) throw DimensionError("wilcoxon: vectors differ in length");

  std::vector<double> diffs;
  double diff_sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    diff_sum += d;
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.size() < 5) {
    throw StatsError("wilcoxon: fewer than 5 non-zero differences");
  }

  std::vector<double> magnitudes(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) magnitudes[i] = std::abs(diffs[i]);
  std::vector<std::int64_t> tie_sizes;
  const std::vector<double> ranks = average_ranks(magnitudes, tie_sizes);

  double w_plus = 0.0, w_minus = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0.0 ? w_plus : w_minus) += ranks[i];
  }
  const double w_min = std::min(w_plus, w_minus);

  SignificanceReport report;
  report.test = "wilcoxon-matched-pairs";
  report.statistic = w_min;
  report.p_value = diffs.size() <= kExactLimit ? exact_p(ranks, w_min)
                                               : approx_p(ranks, tie_sizes, w_min);
  report.effect = diff_sum / static_cast<double>(x.size());
  double ss = 0.0;
  const double mean_d = report.effect;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    ss += (d - mean_d) * (d - mean_d);
  }
  report.standard_error =
      std::sqrt(ss / static_cast<double>(x.size() - 1)) / std::sqrt(static_cast<double>(x.size()));
  report.alpha = alpha;
  report.significant = report.p_value < alpha;
  return report;
}

}  // namespace smteval::stats
