#ifndef SMTEVAL_TEXT_TRUECASE_HPP
#define SMTEVAL_TEXT_TRUECASE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "smteval/text/corpus.hpp"

namespace smteval::text {

/// Casing statistics learned from a tokenized corpus. Only tokens at
/// non-sentence-initial positions count as evidence; best_form maps each
/// lowercase key to its most frequent surface form (ties resolved to the
/// lexicographically smallest form).
struct TruecaseModel {
  std::map<std::string, std::string> best_form;
  std::map<std::string, std::int64_t> evidence;

  void save(std::ostream& out) const;
  static TruecaseModel load(std::istream& in);
};

/// Throws EmptyInputError when the corpus has no sentences.
TruecaseModel train_truecaser(std::span<const TokenizedSentence> corpus);

/// Replaces the sentence-initial token by the model's best form of its
/// lowercase key, or lowercases it when the key is unknown. Other tokens
/// are never touched.
TokenizedSentence truecase(const TokenizedSentence& sentence, const TruecaseModel& model);

}  // namespace smteval::text

#endif
