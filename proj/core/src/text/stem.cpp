#include "smteval/text/stem.hpp"

#include "smteval/utf8.hpp"

namespace smteval::text {

namespace {

bool is_word_like(const std::string& token) {
  std::size_t pos = 0;
  while (pos < token.size()) {
    const char32_t cp = utf8::decode_next(token, pos);
    if (utf8::is_letter(cp) || (cp >= U'0' && cp <= U'9')) return true;
  }
  return false;
}

}  // namespace

TokenizedSentence stem_for_alignment(const TokenizedSentence& sentence, std::size_t k) {
  if (k == 0) k = 1;
  TokenizedSentence out;
  out.reserve(sentence.size());
  for (const auto& token : sentence) {
    out.push_back(is_word_like(token) ? utf8::prefix(token, k) : token);
  }
  return out;
}

}  // namespace smteval::text
