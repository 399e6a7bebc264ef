#ifndef SMTEVAL_METRICS_NORMALIZE_HPP
#define SMTEVAL_METRICS_NORMALIZE_HPP

#include <string_view>

namespace smteval::metrics {

enum class Metric { Bleu, Nist, Meteor, Ter };

std::string_view to_string(Metric metric);
Metric metric_from_string(std::string_view name);

struct NormalizedScore {
  Metric metric = Metric::Bleu;
  double raw = 0.0;
  double normalized = 0.0;  // in [0,100], higher is better
};

/// Puts every metric on the shared 0-100 higher-is-better scale: BLEU and
/// METEOR x100, NIST x100/15, TER inverted as 100 - raw (clamped to
/// [0,100]). Throws RangeError when raw lies outside the metric's native
/// range (BLEU/METEOR [0,1], NIST [0,15], TER >= 0).
NormalizedScore normalize_score(Metric metric, double raw);

/// Quality bands over normalized scores: below 15 unusable, 15-30 rough,
/// above 30 up to 50 understandable, above 50 good and fluent.
enum class Band { Unsatisfactory, Rough, Understandable, GoodFluent };

std::string_view to_string(Band band);

/// Throws RangeError outside [0,100].
Band interpretability_band(double normalized);

}  // namespace smteval::metrics

#endif
