#ifndef SMTEVAL_TEXT_CLEAN_HPP
#define SMTEVAL_TEXT_CLEAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "smteval/text/corpus.hpp"

namespace smteval::text {

/// Reasons for dropping a sentence pair, in rule-evaluation order. A
/// dropped pair gets exactly one reason: the first rule that fails.
enum class DropReason {
  TooLong,
  BadRatio,
  Empty,
  ForeignScript,
  Duplicate,
  Unfinished,
};

std::string_view to_string(DropReason reason);

enum class Script { Latin, Any };

struct CleanConfig {
  std::size_t max_tokens = 80;       // inclusive: exactly max_tokens is kept
  double max_length_ratio = 9.0;
  double foreign_char_ratio = 0.5;
  bool drop_duplicates = true;
  bool require_terminal_punct = false;
  Script source_script = Script::Latin;
  Script target_script = Script::Latin;
};

/// Tracks pairs already seen for duplicate removal. Results must equal a
/// sequential left-to-right pass, so feed pairs in corpus order.
class DuplicateTracker {
 public:
  /// Records the pair; returns true when it was already present.
  bool seen_before(const SentencePair& pair);

 private:
  std::unordered_set<std::string> seen_;
};

/// Applies the drop rules in DropReason order and returns the first
/// failing one, or nullopt when the pair is kept. The length-ratio rule
/// only applies when both sides are non-empty (empty sides are the Empty
/// rule's business); the terminal-punctuation rule checks both sides.
std::optional<DropReason> clean_pair(const SentencePair& pair, const CleanConfig& config,
                                     DuplicateTracker& seen);

}  // namespace smteval::text

#endif
