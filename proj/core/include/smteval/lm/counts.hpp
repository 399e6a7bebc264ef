#ifndef SMTEVAL_LM_COUNTS_HPP
#define SMTEVAL_LM_COUNTS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "smteval/text/corpus.hpp"

namespace smteval::lm {

using text::TokenizedSentence;

inline constexpr const char* kSentenceBegin = "<s>";
inline constexpr const char* kSentenceEnd = "</s>";
inline constexpr const char* kUnknown = "<unk>";

/// N-gram counts up to a fixed order. Keys are tokens joined with single
/// spaces (tokens never contain whitespace). Tables built by count_ngrams
/// carry sentence-boundary markers; hand-built tables need not.
class CountTable {
 public:
  explicit CountTable(int order, bool boundary_markers = false);

  int order() const { return order_; }
  bool boundary_markers() const { return boundary_markers_; }

  void add(std::span<const std::string> ngram, std::int64_t count = 1);
  void add(const std::string& joined, std::int64_t count = 1);

  /// Counted k-grams, k in [1, order].
  const std::map<std::string, std::int64_t>& grams(int k) const;
  std::int64_t total(int k) const;
  bool empty() const;

 private:
  int order_;
  bool boundary_markers_;
  std::vector<std::map<std::string, std::int64_t>> grams_;
};

/// Counts every k-gram (k = 1..order) of each sentence padded with
/// (order-1) begin markers and one end marker, skipping k-grams that end
/// inside the begin padding. So "a b" at order 2 yields unigrams
/// {a, b, </s>} and bigrams {<s> a, a b, b </s>}, with no <s> unigram.
CountTable count_ngrams(std::span<const TokenizedSentence> corpus, int order);

/// Number of tokens in a joined n-gram key.
int ngram_length(std::string_view joined);

/// History part of a joined key (everything before the last token).
std::string_view ngram_history(std::string_view joined);

/// Last token of a joined key.
std::string_view ngram_word(std::string_view joined);

/// Key with the oldest (first) token dropped.
std::string_view ngram_drop_first(std::string_view joined);

}  // namespace smteval::lm

#endif
