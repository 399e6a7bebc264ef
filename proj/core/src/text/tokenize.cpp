#include "smteval/text/tokenize.hpp"

#include "smteval/utf8.hpp"

namespace smteval::text {

namespace {

bool is_detached(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U';': case U':': case U'!':
    case U'?': case U'"': case U'(': case U')':
      return true;
    default:
      return false;
  }
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == 0x00A0;
}

}  // namespace

TokenizedSentence tokenize(std::string_view line) {
  TokenizedSentence tokens;
  std::string current;
  std::size_t pos = 0;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  while (pos < line.size()) {
    const char32_t cp = utf8::decode_next(line, pos);
    if (is_space(cp)) {
      flush();
    } else if (is_detached(cp)) {
      flush();
      std::string punct;
      utf8::append(punct, cp);
      tokens.push_back(punct);
    } else {
      utf8::append(current, cp);
    }
  }
  flush();
  return tokens;
}

TokenizedSentence split_tokens(std::string_view line) {
  TokenizedSentence tokens;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(' ', start);
    if (end == std::string_view::npos) end = line.size();
    if (end > start) tokens.emplace_back(line.substr(start, end - start));
    if (end == line.size()) break;
    start = end + 1;
  }
  return tokens;
}

}  // namespace smteval::text
