#ifndef SMTEVAL_TEXT_STEM_HPP
#define SMTEVAL_TEXT_STEM_HPP

#include <cstddef>

#include "smteval/text/corpus.hpp"

namespace smteval::text {

/// Crude prefix stemmer for alignment training: every token is truncated
/// to its first min(k, length) codepoints. Tokens without any letter or
/// digit (detached punctuation) pass through unchanged.
TokenizedSentence stem_for_alignment(const TokenizedSentence& sentence, std::size_t k = 4);

}  // namespace smteval::text

#endif
