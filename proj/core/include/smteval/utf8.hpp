#ifndef SMTEVAL_UTF8_HPP
#define SMTEVAL_UTF8_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smteval::utf8 {

/// Decodes the codepoint starting at byte offset `pos` and advances `pos`
/// past it. Throws EncodingError on malformed input (truncated sequences,
/// overlong encodings, surrogates, values above U+10FFFF).
char32_t decode_next(std::string_view s, std::size_t& pos);

bool is_valid(std::string_view s);

std::vector<char32_t> decode(std::string_view s);

void append(std::string& out, char32_t cp);

std::string encode(const std::vector<char32_t>& cps);

/// Number of Unicode scalar values in `s`.
std::size_t length(std::string_view s);

/// First min(k, length) codepoints of `s`.
std::string prefix(std::string_view s, std::size_t k);

/// Lowercases ASCII plus the Latin-1 Supplement and Latin Extended-A
/// ranges, which covers the European scripts this toolkit processes.
/// Other codepoints pass through unchanged.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

bool is_letter(char32_t cp);
bool is_latin_letter(char32_t cp);

}  // namespace smteval::utf8

#endif
