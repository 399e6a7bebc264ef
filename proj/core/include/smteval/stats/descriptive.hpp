#ifndef SMTEVAL_STATS_DESCRIPTIVE_HPP
#define SMTEVAL_STATS_DESCRIPTIVE_HPP

#include <cstddef>
#include <optional>
#include <span>

namespace smteval::stats {

struct Descriptive {
  double mean = 0.0;
  std::optional<double> sd;  // sample sd (n-1 denominator), absent for n < 2
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

/// Throws EmptyInputError for an empty span.
Descriptive descriptive(std::span<const double> values);

}  // namespace smteval::stats

#endif
