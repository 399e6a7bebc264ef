#include "smteval/metrics/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "smteval/errors.hpp"

namespace smteval::metrics {

namespace {

using NgramCounts = std::unordered_map<std::string, std::int64_t>;

NgramCounts ngram_counts(const TokenizedSentence& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
      key.push_back(' ');
      key += tokens[i + j];
    }
    counts[key] += 1;
  }
  return counts;
}

std::int64_t clipped_matches(const TokenizedSentence& candidate,
                             const std::vector<TokenizedSentence>& references, int n) {
  const NgramCounts cand = ngram_counts(candidate, n);
  if (cand.empty()) return 0;
  NgramCounts max_ref;
  for (const auto& ref : references) {
    for (const auto& [gram, count] : ngram_counts(ref, n)) {
      auto& best = max_ref[gram];
      best = std::max(best, count);
    }
  }
  std::int64_t matches = 0;
  for (const auto& [gram, count] : cand) {
    const auto it = max_ref.find(gram);
    if (it != max_ref.end()) matches += std::min(count, it->second);
  }
  return matches;
}

std::int64_t effective_reference_length(const EvalPair& pair) {
  const auto c = static_cast<std::int64_t>(pair.candidate.size());
  std::int64_t best = static_cast<std::int64_t>(pair.references.front().size());
  for (const auto& ref : pair.references) {
    const auto r = static_cast<std::int64_t>(ref.size());
    const auto d_new = std::llabs(r - c);
    const auto d_old = std::llabs(best - c);
    if (d_new < d_old || (d_new == d_old && r < best)) best = r;
  }
  return best;
}

double brevity_penalty(std::int64_t c, std::int64_t r) {
  if (c > r) return 1.0;
  if (c == 0) return 0.0;
  return std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
}

std::vector<double> resolve_weights(std::span<const double> weights, int max_order) {
  if (weights.empty()) {
    return std::vector<double>(static_cast<std::size_t>(max_order),
                               1.0 / static_cast<double>(max_order));
  }
  if (static_cast<int>(weights.size()) != max_order) {
    throw RangeError("bleu: need one weight per n-gram order");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw RangeError("bleu: weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw RangeError("bleu: weights must sum to 1");
  return {weights.begin(), weights.end()};
}

double geometric_score(std::span<const double> precisions, std::span<const double> weights,
                       double brevity) {
  double log_sum = 0.0;
  for (std::size_t i = 0; i < precisions.size(); ++i) {
    if (precisions[i] <= 0.0) return 0.0;
    log_sum += weights[i] * std::log(precisions[i]);
  }
  return brevity * std::exp(log_sum);
}

// per-sentence score with 0.1 pseudo-count smoothing of zero numerators;
// orders with no candidate n-grams drop out and the weights renormalize
double sentence_score(const EvalPair& pair, int max_order, std::span<const double> weights) {
  const auto c = static_cast<std::int64_t>(pair.candidate.size());
  const std::int64_t r = effective_reference_length(pair);
  const double brevity = brevity_penalty(c, r);
  if (c == 0) return 0.0;
  double log_sum = 0.0;
  double weight_mass = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const std::int64_t total = std::max<std::int64_t>(c - n + 1, 0);
    if (total == 0) continue;
    double matched = static_cast<double>(clipped_matches(pair.candidate, pair.references, n));
    if (matched == 0.0) matched = 0.1;
    const double w = weights[static_cast<std::size_t>(n - 1)];
    log_sum += w * std::log(matched / static_cast<double>(total));
    weight_mass += w;
  }
  if (weight_mass <= 0.0) return 0.0;
  return brevity * std::exp(log_sum / weight_mass);
}

}  // namespace

BleuReport bleu(std::span<const EvalPair> pairs, int max_order, std::span<const double> weights,
                BleuLevel level) {
  if (pairs.empty()) throw EmptyInputError("bleu: no evaluation pairs");
  if (max_order < 1) throw RangeError("bleu: n-gram order must be >= 1");
  for (const auto& pair : pairs) {
    if (pair.references.empty()) throw EmptyInputError("bleu: pair without references");
  }

  BleuReport report;
  report.max_order = max_order;
  report.weights = resolve_weights(weights, max_order);
  report.precisions.assign(static_cast<std::size_t>(max_order), 0.0);

  std::vector<std::int64_t> matches(static_cast<std::size_t>(max_order), 0);
  std::vector<std::int64_t> totals(static_cast<std::size_t>(max_order), 0);
  for (const auto& pair : pairs) {
    const auto len = static_cast<std::int64_t>(pair.candidate.size());
    report.candidate_length += len;
    report.reference_length += effective_reference_length(pair);
    for (int n = 1; n <= max_order; ++n) {
      matches[static_cast<std::size_t>(n - 1)] +=
          clipped_matches(pair.candidate, pair.references, n);
      totals[static_cast<std::size_t>(n - 1)] += std::max<std::int64_t>(len - n + 1, 0);
    }
  }
  for (int n = 0; n < max_order; ++n) {
    const auto i = static_cast<std::size_t>(n);
    report.precisions[i] =
        totals[i] > 0 ? static_cast<double>(matches[i]) / static_cast<double>(totals[i]) : 0.0;
  }
  report.brevity_penalty = brevity_penalty(report.candidate_length, report.reference_length);

  if (level == BleuLevel::Corpus) {
    report.score = geometric_score(report.precisions, report.weights, report.brevity_penalty);
    return report;
  }

  double log_sum = 0.0;
  bool zero = false;
  for (const auto& pair : pairs) {
    const double s = sentence_score(pair, max_order, report.weights);
    if (s <= 0.0) {
      zero = true;
      break;
    }
    log_sum += std::log(s);
  }
  report.score = zero ? 0.0 : std::exp(log_sum / static_cast<double>(pairs.size()));
  return report;
}

}  // namespace smteval::metrics
