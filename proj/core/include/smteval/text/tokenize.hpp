#ifndef SMTEVAL_TEXT_TOKENIZE_HPP
#define SMTEVAL_TEXT_TOKENIZE_HPP

#include <string_view>

#include "smteval/text/corpus.hpp"

namespace smteval::text {

/// Splits on whitespace, then detaches every occurrence of
/// . , ; : ! ? " ( ) as its own token. Hyphens and apostrophes stay
/// attached, so "sub-heading" and "don't" survive as single tokens.
/// No language-specific abbreviation lists: the same input always
/// produces the same tokens.
TokenizedSentence tokenize(std::string_view line);

/// Splits a pre-tokenized line on single spaces.
TokenizedSentence split_tokens(std::string_view line);

}  // namespace smteval::text

#endif
