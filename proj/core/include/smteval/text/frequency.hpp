#ifndef SMTEVAL_TEXT_FREQUENCY_HPP
#define SMTEVAL_TEXT_FREQUENCY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "smteval/text/corpus.hpp"

namespace smteval::text {

struct FrequencyTable {
  std::unordered_map<std::string, std::int64_t> counts;
  std::int64_t total = 0;

  std::int64_t count(std::string_view token) const {
    auto it = counts.find(std::string(token));
    return it == counts.end() ? 0 : it->second;
  }
};

FrequencyTable build_frequency_table(std::span<const TokenizedSentence> corpus);

}  // namespace smteval::text

#endif
