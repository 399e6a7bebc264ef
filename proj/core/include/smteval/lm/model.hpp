#ifndef SMTEVAL_LM_MODEL_HPP
#define SMTEVAL_LM_MODEL_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "smteval/lm/counts.hpp"

namespace smteval::lm {

enum class Smoothing { WittenBell, KneserNeyInterpolated };

std::string_view to_string(Smoothing s);
Smoothing smoothing_from_string(std::string_view name);

/// A smoothed conditional n-gram model. Immutable once estimated; prob()
/// is safe for concurrent readers.
///
/// The vocabulary is the training unigrams plus the <unk> symbol; <s> is
/// a context-only marker and is never predicted. For every history, the
/// probabilities over the vocabulary (including <unk>) sum to 1.
class NGramModel {
 public:
  int order() const { return order_; }
  Smoothing smoothing() const { return smoothing_; }
  bool boundary_markers() const { return boundary_markers_; }

  /// True when a Kneser-Ney discount had no count-of-count support at some
  /// order and fell back to 0.5.
  bool degenerate_discounts() const { return degenerate_discounts_; }

  const std::vector<std::string>& vocabulary() const { return vocab_sorted_; }

  /// Smoothed conditional probability, never exactly 0. Histories longer
  /// than order-1 are truncated to the most recent tokens; out-of-vocabulary
  /// tokens (in the history or as the predicted word) map to <unk>.
  double prob(std::span<const std::string> history, std::string_view word) const;

  /// Model assigning 1/|V| to every word of the vocabulary (<unk> is added
  /// when missing).
  static NGramModel uniform(std::vector<std::string> vocabulary);

  /// Stored k-gram probabilities (k in [1, order]) and history back-off
  /// weights (history length in [1, order-1]), keyed by joined tokens.
  const std::map<std::string, double>& gram_probs(int k) const;
  const std::map<std::string, double>& history_backoffs(int length) const;

  /// Used by the model file reader.
  static NGramModel assemble(int order, Smoothing smoothing, bool boundary_markers,
                             bool degenerate_discounts,
                             std::vector<std::map<std::string, double>> probs,
                             std::vector<std::map<std::string, double>> backoffs);

 private:
  friend NGramModel estimate(const CountTable& table, Smoothing smoothing);

  double lookup(std::span<const std::string_view> history, std::string_view word) const;

  int order_ = 1;
  Smoothing smoothing_ = Smoothing::WittenBell;
  bool boundary_markers_ = false;
  bool degenerate_discounts_ = false;
  std::vector<std::string> vocab_sorted_;
  std::unordered_set<std::string> vocab_;
  std::vector<std::map<std::string, double>> probs_;     // [k-1]: k-gram -> p(last|rest)
  std::vector<std::map<std::string, double>> backoffs_;  // [l-1]: history of length l -> gamma
};

/// Estimates a smoothed model from counts.
///
/// Witten-Bell: p(w|h) = [c(hw) + T(h) p(w|h')] / [c(h.) + T(h)] with T(h)
/// the number of distinct continuations of h, recursing down to the
/// uniform 1/|V| distribution.
///
/// Interpolated Kneser-Ney: absolute discounting with D = n1/(n1 + 2 n2)
/// per order, raw counts at the top order and continuation counts below,
/// interpolated with the lower order and ending in uniform 1/|V|.
/// Count-of-count statistics come from the counts actually discounted at
/// each order; when n1 is zero the discount falls back to 0.5 and the
/// model carries the degenerate_discounts flag.
///
/// Throws EmptyInputError on an empty table.
NGramModel estimate(const CountTable& table, Smoothing smoothing);

}  // namespace smteval::lm

#endif
