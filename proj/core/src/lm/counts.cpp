#include "smteval/lm/counts.hpp"

#include "smteval/errors.hpp"

namespace smteval::lm {

CountTable::CountTable(int order, bool boundary_markers)
    : order_(order), boundary_markers_(boundary_markers) {
  if (order < 1) throw RangeError("count table order must be >= 1");
  grams_.resize(static_cast<std::size_t>(order));
}

void CountTable::add(std::span<const std::string> ngram, std::int64_t count) {
  std::string key;
  for (std::size_t i = 0; i < ngram.size(); ++i) {
    if (i > 0) key.push_back(' ');
    key += ngram[i];
  }
  add(key, count);
}

void CountTable::add(const std::string& joined, std::int64_t count) {
  const int k = ngram_length(joined);
  if (k < 1 || k > order_) throw RangeError("n-gram length outside table order");
  if (count < 1) throw RangeError("n-gram counts must be positive");
  grams_[static_cast<std::size_t>(k - 1)][joined] += count;
}

const std::map<std::string, std::int64_t>& CountTable::grams(int k) const {
  if (k < 1 || k > order_) throw RangeError("n-gram order out of range");
  return grams_[static_cast<std::size_t>(k - 1)];
}

std::int64_t CountTable::total(int k) const {
  std::int64_t sum = 0;
  for (const auto& [key, count] : grams(k)) sum += count;
  return sum;
}

bool CountTable::empty() const {
  for (const auto& level : grams_) {
    if (!level.empty()) return false;
  }
  return true;
}

CountTable count_ngrams(std::span<const TokenizedSentence> corpus, int order) {
  CountTable table(order, /*boundary_markers=*/true);
  std::vector<std::string> padded;
  for (const auto& sentence : corpus) {
    padded.clear();
    padded.insert(padded.end(), static_cast<std::size_t>(order - 1), kSentenceBegin);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.emplace_back(kSentenceEnd);
    for (std::size_t end = static_cast<std::size_t>(order - 1); end < padded.size(); ++end) {
      // k-grams ending at `end`; the end token is never a begin marker here
      std::string key = padded[end];
      table.add(key);
      for (int k = 2; k <= order && end + 1 >= static_cast<std::size_t>(k); ++k) {
        key.insert(0, " ");
        key.insert(0, padded[end + 1 - static_cast<std::size_t>(k)]);
        table.add(key);
      }
    }
  }
  return table;
}

int ngram_length(std::string_view joined) {
  if (joined.empty()) return 0;
  int n = 1;
  for (char c : joined) {
    if (c == ' ') ++n;
  }
  return n;
}

std::string_view ngram_history(std::string_view joined) {
  const auto pos = joined.rfind(' ');
  return pos == std::string_view::npos ? std::string_view{} : joined.substr(0, pos);
}

std::string_view ngram_word(std::string_view joined) {
  const auto pos = joined.rfind(' ');
  return pos == std::string_view::npos ? joined : joined.substr(pos + 1);
}

std::string_view ngram_drop_first(std::string_view joined) {
  const auto pos = joined.find(' ');
  return pos == std::string_view::npos ? std::string_view{} : joined.substr(pos + 1);
}

}  // namespace smteval::lm
