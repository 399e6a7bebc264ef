#include "smteval/stats/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "smteval/stats/descriptive.hpp"
#include "smteval/stats/tests.hpp"

namespace smteval::stats {

namespace {

using metrics::Metric;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

ExpectationCheck mean_check(const ScoreTable& table, Metric metric, double expected,
                            double tolerance) {
  const auto values = table.column(metric);
  const double mean = descriptive(values).mean;
  ExpectationCheck check;
  check.name = table.direction + " " + std::string(metrics::to_string(metric)) + " mean";
  check.value = mean;
  check.expectation = fmt("%.2f +/- %.2f", expected, tolerance);
  check.passed = std::abs(mean - expected) <= tolerance;
  return check;
}

ExpectationCheck wilcoxon_check(const ScoreTable& table, Metric other, bool expect_significant) {
  const SignificanceReport r =
      wilcoxon_matched_pairs(table.column(Metric::Bleu), table.column(other));
  ExpectationCheck check;
  check.name = table.direction + " wilcoxon bleu vs " + std::string(metrics::to_string(other));
  check.value = r.p_value;
  check.expectation = expect_significant ? "p < 0.05" : "p >= 0.05";
  check.passed = expect_significant ? r.p_value < 0.05 : r.p_value >= 0.05;
  return check;
}

ExpectationCheck band_check(const ScoreTable& table) {
  double min_bleu = 100.0;
  bool all_good = true;
  for (const auto& row : table.rows) {
    min_bleu = std::min(min_bleu, row.bleu);
    all_good = all_good &&
               metrics::interpretability_band(row.bleu) == metrics::Band::GoodFluent;
  }
  ExpectationCheck check;
  check.name = table.direction + " bleu bands";
  check.value = min_bleu;
  check.expectation = "all good-fluent (> 50)";
  check.passed = all_good;
  return check;
}

}  // namespace

std::vector<ExpectationCheck> expectation_checks(const ScoreTable& pl_en,
                                                 const ScoreTable& en_pl) {
  std::vector<ExpectationCheck> checks;

  checks.push_back(mean_check(pl_en, Metric::Meteor, 82.72, 0.01));
  checks.push_back(mean_check(en_pl, Metric::Meteor, 78.97, 0.01));
  checks.push_back(mean_check(en_pl, Metric::Nist, 67.58, 0.02));
  checks.push_back(mean_check(pl_en, Metric::Nist, 70.63, 0.10));

  const SignificanceReport ttest =
      t_test(pl_en.column(Metric::Ter), en_pl.column(Metric::Ter), TTestMode::UnpairedPooled);
  {
    ExpectationCheck check;
    check.name = "ter t-test mean difference";
    check.value = ttest.effect;
    check.expectation = "2.50 +/- 0.01";
    check.passed = std::abs(ttest.effect - 2.50) <= 0.01;
    checks.push_back(check);
  }
  {
    ExpectationCheck check;
    check.name = "ter t-test p-value";
    check.value = ttest.p_value;
    check.expectation = "in [0.02, 0.05]";
    check.passed = ttest.p_value >= 0.02 && ttest.p_value <= 0.05;
    checks.push_back(check);
  }

  checks.push_back(wilcoxon_check(pl_en, Metric::Meteor, true));
  checks.push_back(wilcoxon_check(pl_en, Metric::Nist, true));
  checks.push_back(wilcoxon_check(pl_en, Metric::Ter, false));
  checks.push_back(wilcoxon_check(en_pl, Metric::Nist, true));
  checks.push_back(wilcoxon_check(en_pl, Metric::Meteor, true));
  checks.push_back(wilcoxon_check(en_pl, Metric::Ter, false));

  checks.push_back(band_check(pl_en));
  checks.push_back(band_check(en_pl));

  return checks;
}

}  // namespace smteval::stats
