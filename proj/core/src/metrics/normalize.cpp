#include "smteval/metrics/normalize.hpp"

#include <algorithm>
#include <string>

#include "smteval/errors.hpp"

namespace smteval::metrics {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Bleu: return "bleu";
    case Metric::Nist: return "nist";
    case Metric::Meteor: return "meteor";
    case Metric::Ter: return "ter";
  }
  return "unknown";
}

Metric metric_from_string(std::string_view name) {
  if (name == "bleu") return Metric::Bleu;
  if (name == "nist") return Metric::Nist;
  if (name == "meteor") return Metric::Meteor;
  if (name == "ter") return Metric::Ter;
  throw ParseError("unknown metric '" + std::string(name) + "'");
}

NormalizedScore normalize_score(Metric metric, double raw) {
  NormalizedScore out{metric, raw, 0.0};
  switch (metric) {
    case Metric::Bleu:
    case Metric::Meteor:
      if (raw < 0.0 || raw > 1.0) {
        throw RangeError(std::string(to_string(metric)) + " raw score outside [0,1]");
      }
      out.normalized = raw * 100.0;
      break;
    case Metric::Nist:
      if (raw < 0.0 || raw > 15.0) throw RangeError("nist raw score outside [0,15]");
      out.normalized = raw * 100.0 / 15.0;
      break;
    case Metric::Ter:
      if (raw < 0.0) throw RangeError("ter raw score must be >= 0");
      out.normalized = std::clamp(100.0 - raw, 0.0, 100.0);
      break;
  }
  return out;
}

std::string_view to_string(Band band) {
  switch (band) {
    case Band::Unsatisfactory: return "unsatisfactory";
    case Band::Rough: return "rough";
    case Band::Understandable: return "understandable";
    case Band::GoodFluent: return "good-fluent";
  }
  return "unknown";
}

Band interpretability_band(double normalized) {
  if (normalized < 0.0 || normalized > 100.0) {
    throw RangeError("band: normalized score outside [0,100]");
  }
  if (normalized < 15.0) return Band::Unsatisfactory;
  if (normalized <= 30.0) return Band::Rough;
  if (normalized <= 50.0) return Band::Understandable;
  return Band::GoodFluent;
}

}  // namespace smteval::metrics
