#include "smteval/lm/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "smteval/errors.hpp"

namespace smteval::lm {

std::string_view to_string(Smoothing s) {
  switch (s) {
    case Smoothing::WittenBell: return "witten-bell";
    case Smoothing::KneserNeyInterpolated: return "kneser-ney";
  }
  return "unknown";
}

Smoothing smoothing_from_string(std::string_view name) {
  if (name == "witten-bell" || name == "wb") return Smoothing::WittenBell;
  if (name == "kneser-ney" || name == "kn") return Smoothing::KneserNeyInterpolated;
  throw ParseError("unknown smoothing '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split_key(std::string_view joined) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= joined.size()) {
    std::size_t end = joined.find(' ', start);
    if (end == std::string_view::npos) end = joined.size();
    if (end > start) tokens.push_back(joined.substr(start, end - start));
    if (end == joined.size()) break;
    start = end + 1;
  }
  return tokens;
}

std::string join(std::span<const std::string_view> tokens, std::string_view last = {}) {
  std::string key;
  for (const auto& t : tokens) {
    key += t;
    key.push_back(' ');
  }
  if (!last.empty()) {
    key += last;
  } else if (!key.empty()) {
    key.pop_back();
  }
  return key;
}

// Back-off walk over (possibly partially built) probability tables.
// probs[k-1] holds k-gram probabilities, backoffs[l-1] history weights.
double table_lookup(const std::vector<std::map<std::string, double>>& probs,
                    const std::vector<std::map<std::string, double>>& backoffs,
                    std::span<const std::string_view> history, std::string_view word) {
  double gamma = 1.0;
  for (std::size_t len = history.size();; --len) {
    const auto tail = history.subspan(history.size() - len);
    const auto& level = probs[len];
    const auto it = level.find(join(tail, word));
    if (it != level.end()) return gamma * it->second;
    if (len == 0) return 0.0;
    if (len <= backoffs.size()) {
      const auto& bo = backoffs[len - 1];
      const auto bit = bo.find(join(tail));
      if (bit != bo.end()) gamma *= bit->second;
    }
  }
}

struct ContextStats {
  std::int64_t continuations = 0;  // c(h.)
  std::int64_t types = 0;          // T(h)
};

std::map<std::string, ContextStats> context_stats(const std::map<std::string, std::int64_t>& grams) {
  std::map<std::string, ContextStats> ctx;
  for (const auto& [gram, count] : grams) {
    auto& entry = ctx[std::string(ngram_history(gram))];
    entry.continuations += count;
    entry.types += 1;
  }
  return ctx;
}

NGramModel estimate_witten_bell(const CountTable& table, NGramModel model) {
  const int order = table.order();
  const double uniform = 1.0 / static_cast<double>(model.vocabulary().size());

  std::vector<std::map<std::string, double>> probs(static_cast<std::size_t>(order));
  std::vector<std::map<std::string, double>> backoffs(
      order > 1 ? static_cast<std::size_t>(order - 1) : 0);

  const std::int64_t total = table.total(1);
  const auto types = static_cast<std::int64_t>(table.grams(1).size());
  const double denom1 = static_cast<double>(total + types);
  for (const auto& word : model.vocabulary()) {
    const auto it = table.grams(1).find(word);
    const double count = it == table.grams(1).end() ? 0.0 : static_cast<double>(it->second);
    probs[0][word] = denom1 > 0.0
                         ? (count + static_cast<double>(types) * uniform) / denom1
                         : uniform;
  }

  for (int k = 2; k <= order; ++k) {
    const auto ctx = context_stats(table.grams(k));
    for (const auto& [gram, count] : table.grams(k)) {
      const auto& stats = ctx.at(std::string(ngram_history(gram)));
      const auto lower = split_key(ngram_drop_first(gram));
      const double p_lower =
          table_lookup(probs, backoffs,
                       std::span(lower).first(lower.size() - 1), lower.back());
      const double denom = static_cast<double>(stats.continuations + stats.types);
      probs[static_cast<std::size_t>(k - 1)][gram] =
          (static_cast<double>(count) + static_cast<double>(stats.types) * p_lower) / denom;
    }
    for (const auto& [history, stats] : ctx) {
      backoffs[static_cast<std::size_t>(k - 2)][history] =
          static_cast<double>(stats.types) /
          static_cast<double>(stats.continuations + stats.types);
    }
  }

  return NGramModel::assemble(order, Smoothing::WittenBell, table.boundary_markers(), false,
                              std::move(probs), std::move(backoffs));
}

double kn_discount(const std::map<std::string, std::int64_t>& counts, bool& degenerate) {
  std::int64_t n1 = 0, n2 = 0;
  for (const auto& [gram, count] : counts) {
    if (count == 1) ++n1;
    if (count == 2) ++n2;
  }
  if (n1 == 0) {
    // no singleton support: the n1/(n1+2 n2) formula would zero out the
    // interpolation mass, so fall back and flag the model
    degenerate = true;
    return 0.5;
  }
  return static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
}

NGramModel estimate_kneser_ney(const CountTable& table, NGramModel model) {
  const int order = table.order();
  const double uniform = 1.0 / static_cast<double>(model.vocabulary().size());

  // Counts discounted at each level: raw at the top order, continuation
  // type counts (distinct predecessors) below.
  std::vector<std::map<std::string, std::int64_t>> adjusted(static_cast<std::size_t>(order));
  adjusted[static_cast<std::size_t>(order - 1)] = table.grams(order);
  for (int k = 1; k < order; ++k) {
    auto& level = adjusted[static_cast<std::size_t>(k - 1)];
    for (const auto& [gram, count] : table.grams(k + 1)) {
      level[std::string(ngram_drop_first(gram))] += 1;
    }
  }

  bool degenerate = false;
  std::vector<double> discount(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    discount[static_cast<std::size_t>(k - 1)] =
        kn_discount(adjusted[static_cast<std::size_t>(k - 1)], degenerate);
  }

  std::vector<std::map<std::string, double>> probs(static_cast<std::size_t>(order));
  std::vector<std::map<std::string, double>> backoffs(
      order > 1 ? static_cast<std::size_t>(order - 1) : 0);

  const auto& uni = adjusted[0];
  std::int64_t uni_total = 0;
  for (const auto& [gram, count] : uni) uni_total += count;
  const double d1 = discount[0];
  const auto uni_types = static_cast<double>(uni.size());
  for (const auto& word : model.vocabulary()) {
    if (uni_total == 0) {
      probs[0][word] = uniform;
      continue;
    }
    const auto it = uni.find(word);
    const double count = it == uni.end() ? 0.0 : static_cast<double>(it->second);
    probs[0][word] = std::max(count - d1, 0.0) / static_cast<double>(uni_total) +
                     d1 * uni_types / static_cast<double>(uni_total) * uniform;
  }

  for (int k = 2; k <= order; ++k) {
    const auto& level_counts = adjusted[static_cast<std::size_t>(k - 1)];
    const double dk = discount[static_cast<std::size_t>(k - 1)];
    const auto ctx = context_stats(level_counts);
    for (const auto& [gram, count] : level_counts) {
      const auto& stats = ctx.at(std::string(ngram_history(gram)));
      const auto lower = split_key(ngram_drop_first(gram));
      const double p_lower =
          table_lookup(probs, backoffs,
                       std::span(lower).first(lower.size() - 1), lower.back());
      const double denom = static_cast<double>(stats.continuations);
      probs[static_cast<std::size_t>(k - 1)][gram] =
          std::max(static_cast<double>(count) - dk, 0.0) / denom +
          dk * static_cast<double>(stats.types) / denom * p_lower;
    }
    for (const auto& [history, stats] : ctx) {
      backoffs[static_cast<std::size_t>(k - 2)][history] =
          dk * static_cast<double>(stats.types) / static_cast<double>(stats.continuations);
    }
  }

  return NGramModel::assemble(order, Smoothing::KneserNeyInterpolated, table.boundary_markers(),
                              degenerate, std::move(probs), std::move(backoffs));
}

}  // namespace

NGramModel estimate(const CountTable& table, Smoothing smoothing) {
  if (table.empty()) throw EmptyInputError("estimate: empty count table");

  // vocabulary: every token observed in final position at any order (for
  // count_ngrams tables that is exactly the unigram set) plus <unk>; the
  // begin marker is context-only and never predicted
  std::set<std::string> vocab;
  for (int k = 1; k <= table.order(); ++k) {
    for (const auto& [gram, count] : table.grams(k)) {
      vocab.insert(std::string(ngram_word(gram)));
    }
  }
  vocab.erase(kSentenceBegin);
  vocab.insert(kUnknown);

  NGramModel shell;
  shell.vocab_sorted_.assign(vocab.begin(), vocab.end());

  if (smoothing == Smoothing::WittenBell) return estimate_witten_bell(table, std::move(shell));
  return estimate_kneser_ney(table, std::move(shell));
}

NGramModel NGramModel::assemble(int order, Smoothing smoothing, bool boundary_markers,
                                bool degenerate_discounts,
                                std::vector<std::map<std::string, double>> probs,
                                std::vector<std::map<std::string, double>> backoffs) {
  NGramModel model;
  model.order_ = order;
  model.smoothing_ = smoothing;
  model.boundary_markers_ = boundary_markers;
  model.degenerate_discounts_ = degenerate_discounts;
  model.probs_ = std::move(probs);
  model.backoffs_ = std::move(backoffs);
  model.vocab_sorted_.clear();
  for (const auto& [word, p] : model.probs_[0]) model.vocab_sorted_.push_back(word);
  model.vocab_.insert(model.vocab_sorted_.begin(), model.vocab_sorted_.end());
  return model;
}

NGramModel NGramModel::uniform(std::vector<std::string> vocabulary) {
  std::set<std::string> vocab(vocabulary.begin(), vocabulary.end());
  vocab.erase(kSentenceBegin);
  vocab.insert(kUnknown);
  std::vector<std::map<std::string, double>> probs(1);
  const double p = 1.0 / static_cast<double>(vocab.size());
  for (const auto& word : vocab) probs[0][word] = p;
  return assemble(1, Smoothing::WittenBell, false, false, std::move(probs), {});
}

const std::map<std::string, double>& NGramModel::gram_probs(int k) const {
  if (k < 1 || k > order_) throw RangeError("model order out of range");
  return probs_[static_cast<std::size_t>(k - 1)];
}

const std::map<std::string, double>& NGramModel::history_backoffs(int length) const {
  if (length < 1 || length > order_ - 1) throw RangeError("history length out of range");
  return backoffs_[static_cast<std::size_t>(length - 1)];
}

double NGramModel::lookup(std::span<const std::string_view> history,
                          std::string_view word) const {
  return table_lookup(probs_, backoffs_, history, word);
}

double NGramModel::prob(std::span<const std::string> history, std::string_view word) const {
  const auto context = static_cast<std::size_t>(order_ - 1);
  const std::size_t start = history.size() > context ? history.size() - context : 0;
  std::vector<std::string_view> mapped;
  mapped.reserve(history.size() - start);
  for (std::size_t i = start; i < history.size(); ++i) {
    const std::string& token = history[i];
    const bool known = token == kSentenceBegin || vocab_.contains(token);
    mapped.push_back(known ? std::string_view(token) : std::string_view(kUnknown));
  }
  const std::string_view w = vocab_.contains(std::string(word)) ? word : kUnknown;
  return lookup(mapped, w);
}

}  // namespace smteval::lm
