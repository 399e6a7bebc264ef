#include "smteval/text/frequency.hpp"

namespace smteval::text {

FrequencyTable build_frequency_table(std::span<const TokenizedSentence> corpus) {
  FrequencyTable table;
  for (const auto& sentence : corpus) {
    for (const auto& token : sentence) {
      table.counts[token] += 1;
      table.total += 1;
    }
  }
  return table;
}

}  // namespace smteval::text
