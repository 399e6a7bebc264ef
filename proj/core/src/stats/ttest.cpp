#include "smteval/stats/tests.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "smteval/errors.hpp"
#include "smteval/stats/descriptive.hpp"

namespace smteval::stats {

namespace {

double two_sided_p(double t, double df) {
  const boost::math::students_t_distribution<double> dist(df);
  return 2.0 * boost::math::cdf(dist, -std::abs(t));
}

}  // namespace

SignificanceReport t_test(std::span<const double> x, std::span<const double> y, TTestMode mode,
                          double alpha) {
  SignificanceReport report;
  report.alpha = alpha;

  if (mode == TTestMode::Paired) {
    if (x.size() != y.size()) throw DimensionError("t-test: paired vectors differ in length");
    if (x.size() < 2) throw StatsError("t-test: need at least 2 pairs");
    report.test = "t-test-paired";
    std::vector<double> diffs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diffs[i] = x[i] - y[i];
    const Descriptive d = descriptive(diffs);
    report.effect = d.mean;
    report.standard_error = *d.sd / std::sqrt(static_cast<double>(diffs.size()));
    const double df = static_cast<double>(diffs.size() - 1);
    if (report.standard_error == 0.0) {
      report.statistic = 0.0;
      report.p_value = report.effect == 0.0 ? 1.0 : 0.0;
    } else {
      report.statistic = report.effect / report.standard_error;
      report.p_value = two_sided_p(report.statistic, df);
    }
  } else {
    if (x.size() < 2 || y.size() < 2) throw StatsError("t-test: need at least 2 values per group");
    report.test = "t-test-unpaired-pooled";
    const Descriptive dx = descriptive(x);
    const Descriptive dy = descriptive(y);
    const auto n1 = static_cast<double>(x.size());
    const auto n2 = static_cast<double>(y.size());
    const double pooled_var =
        ((n1 - 1.0) * (*dx.sd) * (*dx.sd) + (n2 - 1.0) * (*dy.sd) * (*dy.sd)) / (n1 + n2 - 2.0);
    report.effect = dx.mean - dy.mean;
    report.standard_error = std::sqrt(pooled_var * (1.0 / n1 + 1.0 / n2));
    const double df = n1 + n2 - 2.0;
    if (report.standard_error == 0.0) {
      report.statistic = 0.0;
      report.p_value = report.effect == 0.0 ? 1.0 : 0.0;
    } else {
      report.statistic = report.effect / report.standard_error;
      report.p_value = two_sided_p(report.statistic, df);
    }
  }

  report.significant = report.p_value < alpha;
  return report;
}

}  // namespace smteval::stats
