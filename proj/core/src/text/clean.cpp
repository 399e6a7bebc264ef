#include "smteval/text/clean.hpp"

#include <algorithm>

#include "smteval/utf8.hpp"

namespace smteval::text {

std::string_view to_string(DropReason reason) {
  switch (reason) {
    case DropReason::TooLong: return "TooLong";
    case DropReason::BadRatio: return "BadRatio";
    case DropReason::Empty: return "Empty";
    case DropReason::ForeignScript: return "ForeignScript";
    case DropReason::Duplicate: return "Duplicate";
    case DropReason::Unfinished: return "Unfinished";
  }
  return "Unknown";
}

bool DuplicateTracker::seen_before(const SentencePair& pair) {
  std::string key;
  for (const auto& t : pair.source) {
    key += t;
    key.push_back('\x1f');
  }
  key.push_back('\x1e');
  for (const auto& t : pair.target) {
    key += t;
    key.push_back('\x1f');
  }
  return !seen_.insert(key).second;
}

namespace {

bool too_foreign(const TokenizedSentence& side, Script script, double max_ratio) {
  if (script == Script::Any) return false;
  std::int64_t letters = 0, foreign = 0;
  for (const auto& token : side) {
    std::size_t pos = 0;
    while (pos < token.size()) {
      const char32_t cp = utf8::decode_next(token, pos);
      if (!utf8::is_letter(cp)) continue;
      ++letters;
      if (!utf8::is_latin_letter(cp)) ++foreign;
    }
  }
  if (letters == 0) return false;
  return static_cast<double>(foreign) / static_cast<double>(letters) > max_ratio;
}

bool unfinished(const TokenizedSentence& side) {
  if (side.empty()) return true;
  const std::string& last = side.back();
  return !(last == "." || last == "!" || last == "?" || last == "\"" || last == ")");
}

}  // namespace

std::optional<DropReason> clean_pair(const SentencePair& pair, const CleanConfig& config,
                                     DuplicateTracker& seen) {
  const std::size_t src = pair.source.size();
  const std::size_t tgt = pair.target.size();

  if (src > config.max_tokens || tgt > config.max_tokens) return DropReason::TooLong;

  if (src > 0 && tgt > 0) {
    const double longer = static_cast<double>(std::max(src, tgt));
    const double shorter = static_cast<double>(std::min(src, tgt));
    if (longer / shorter > config.max_length_ratio) return DropReason::BadRatio;
  }

  if (src == 0 || tgt == 0) return DropReason::Empty;

  if (too_foreign(pair.source, config.source_script, config.foreign_char_ratio) ||
      too_foreign(pair.target, config.target_script, config.foreign_char_ratio)) {
    return DropReason::ForeignScript;
  }

  if (config.drop_duplicates && seen.seen_before(pair)) return DropReason::Duplicate;

  if (config.require_terminal_punct && (unfinished(pair.source) || unfinished(pair.target))) {
    return DropReason::Unfinished;
  }

  return std::nullopt;
}

}  // namespace smteval::text
