#ifndef SMTEVAL_TEXT_NORMALIZE_HPP
#define SMTEVAL_TEXT_NORMALIZE_HPP

#include <string>
#include <string_view>

namespace smteval::text {

/// Maps typographic punctuation to ASCII canonical forms and collapses
/// runs of spaces. The mapping, applied codepoint by codepoint:
///
///   U+201C U+201D U+201E U+00AB U+00BB  ->  "
///   U+2018 U+2019 U+201A               ->  '
///   U+2013 U+2014                      ->  -
///   U+2026                             ->  ...
///   U+00A0 (no-break space)            ->  space
///
/// Total on valid UTF-8 input and idempotent.
std::string normalize_punctuation(std::string_view line);

}  // namespace smteval::text

#endif
