#include "smteval/stats/descriptive.hpp"

#include <algorithm>
#include <cmath>

#include "smteval/errors.hpp"

namespace smteval::stats {

Descriptive descriptive(std::span<const double> values) {
  if (values.empty()) throw EmptyInputError("descriptive: no values");
  Descriptive d;
  d.n = values.size();
  d.min = values[0];
  d.max = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    d.min = std::min(d.min, v);
    d.max = std::max(d.max, v);
  }
  d.mean = sum / static_cast<double>(d.n);
  if (d.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - d.mean) * (v - d.mean);
    d.sd = std::sqrt(ss / static_cast<double>(d.n - 1));
  }
  return d;
}

}  // namespace smteval::stats
