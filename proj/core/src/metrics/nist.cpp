#include "smteval/metrics/nist.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "smteval/errors.hpp"

namespace smteval::metrics {

namespace {

using NgramCounts = std::unordered_map<std::string, std::int64_t>;

std::string join_ngram(const TokenizedSentence& tokens, std::size_t start, int n) {
  std::string key = tokens[start];
  for (int j = 1; j < n; ++j) {
    key.push_back(' ');
    key += tokens[start + static_cast<std::size_t>(j)];
  }
  return key;
}

void add_ngrams(NgramCounts& counts, const TokenizedSentence& tokens, int n) {
  if (static_cast<int>(tokens.size()) < n) return;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    counts[join_ngram(tokens, i, n)] += 1;
  }
}

}  // namespace

NistReport nist(std::span<const EvalPair> pairs, int max_order) {
  if (pairs.empty()) throw EmptyInputError("nist: no evaluation pairs");
  if (max_order < 1) throw RangeError("nist: n-gram order must be >= 1");
  for (const auto& pair : pairs) {
    if (pair.references.empty()) throw EmptyInputError("nist: pair without references");
  }

  NistReport report;
  report.max_order = max_order;
  report.info_gains.assign(static_cast<std::size_t>(max_order), 0.0);
  report.candidate_counts.assign(static_cast<std::size_t>(max_order), 0);

  // pooled reference corpus counts, the basis of the information weights
  std::vector<NgramCounts> ref_counts(static_cast<std::size_t>(max_order));
  std::int64_t ref_tokens = 0;
  for (const auto& pair : pairs) {
    for (const auto& ref : pair.references) {
      ref_tokens += static_cast<std::int64_t>(ref.size());
      for (int n = 1; n <= max_order; ++n) {
        add_ngrams(ref_counts[static_cast<std::size_t>(n - 1)], ref, n);
      }
    }
  }

  auto info = [&](const std::string& gram, int n) -> double {
    const auto& level = ref_counts[static_cast<std::size_t>(n - 1)];
    const auto it = level.find(gram);
    if (it == level.end()) return 0.0;
    double prefix_count;
    if (n == 1) {
      prefix_count = static_cast<double>(ref_tokens);
    } else {
      const auto cut = gram.rfind(' ');
      const auto pit = ref_counts[static_cast<std::size_t>(n - 2)].find(gram.substr(0, cut));
      if (pit == ref_counts[static_cast<std::size_t>(n - 2)].end()) return 0.0;
      prefix_count = static_cast<double>(pit->second);
    }
    return std::log2(prefix_count / static_cast<double>(it->second));
  };

  double mean_ref_len = 0.0;
  for (const auto& pair : pairs) {
    const auto& cand = pair.candidate;
    report.candidate_length += static_cast<std::int64_t>(cand.size());
    double ref_len_sum = 0.0;
    for (const auto& ref : pair.references) ref_len_sum += static_cast<double>(ref.size());
    mean_ref_len += ref_len_sum / static_cast<double>(pair.references.size());

    for (int n = 1; n <= max_order; ++n) {
      const auto idx = static_cast<std::size_t>(n - 1);
      report.candidate_counts[idx] +=
          std::max<std::int64_t>(static_cast<std::int64_t>(cand.size()) - n + 1, 0);

      NgramCounts cand_counts;
      add_ngrams(cand_counts, cand, n);
      if (cand_counts.empty()) continue;
      NgramCounts max_ref;
      for (const auto& ref : pair.references) {
        NgramCounts one;
        add_ngrams(one, ref, n);
        for (const auto& [gram, count] : one) {
          auto& best = max_ref[gram];
          best = std::max(best, count);
        }
      }
      for (const auto& [gram, count] : cand_counts) {
        const auto it = max_ref.find(gram);
        if (it == max_ref.end()) continue;
        report.info_gains[idx] +=
            static_cast<double>(std::min(count, it->second)) * info(gram, n);
      }
    }
  }
  report.mean_reference_length = mean_ref_len;

  if (report.candidate_length == 0 || mean_ref_len <= 0.0) {
    report.brevity = 0.0;
    report.score = 0.0;
    return report;
  }

  // beta makes the brevity factor hit 0.5 at a 2/3 length ratio
  static const double kBeta = std::log(0.5) / std::pow(std::log(2.0 / 3.0), 2);
  const double ratio = std::min(1.0, static_cast<double>(report.candidate_length) / mean_ref_len);
  report.brevity = std::exp(kBeta * std::pow(std::log(ratio), 2));

  double sum = 0.0;
  for (int n = 0; n < max_order; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    if (report.candidate_counts[idx] > 0) {
      sum += report.info_gains[idx] / static_cast<double>(report.candidate_counts[idx]);
    }
  }
  report.score = sum * report.brevity;
  return report;
}

}  // namespace smteval::metrics
