#include "smteval/utf8.hpp"

#include "smteval/errors.hpp"

namespace smteval::utf8 {

namespace {

[[noreturn]] void bad(std::size_t pos) {
  throw EncodingError("invalid UTF-8 sequence at byte offset " + std::to_string(pos));
}

}  // namespace

char32_t decode_next(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    bad(pos);
  }
  if (pos + len > s.size()) bad(pos);
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) bad(pos);
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) bad(pos);                    // overlong
  if (cp >= 0xD800 && cp <= 0xDFFF) bad(pos);      // surrogate
  if (cp > 0x10FFFF) bad(pos);
  pos += len;
  return cp;
}

bool is_valid(std::string_view s) {
  std::size_t pos = 0;
  try {
    while (pos < s.size()) decode_next(s, pos);
  } catch (const EncodingError&) {
    return false;
  }
  return true;
}

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) out.push_back(decode_next(s, pos));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::size_t length(std::string_view s) {
  std::size_t pos = 0, n = 0;
  while (pos < s.size()) {
    decode_next(s, pos);
    ++n;
  }
  return n;
}

std::string prefix(std::string_view s, std::size_t k) {
  std::size_t pos = 0, n = 0;
  while (pos < s.size() && n < k) {
    decode_next(s, pos);
    ++n;
  }
  return std::string(s.substr(0, pos));
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  // Latin-1 Supplement uppercase block, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  // Latin Extended-A case pairs; the even/odd parity of the uppercase
  // codepoint flips at U+0139 and again at U+014A.
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) append(out, to_lower(decode_next(s, pos)));
  return out;
}

bool is_latin_letter(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x24F) return true;   // Latin Extended-A/B
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;  // Latin Extended Additional
  return false;
}

bool is_letter(char32_t cp) {
  if (is_latin_letter(cp)) return true;
  if (cp >= 0x370 && cp <= 0x3FF) return true;    // Greek
  if (cp >= 0x400 && cp <= 0x52F) return true;    // Cyrillic
  if (cp >= 0x590 && cp <= 0x5FF) return true;    // Hebrew
  if (cp >= 0x600 && cp <= 0x6FF) return true;    // Arabic
  if (cp >= 0x900 && cp <= 0x97F) return true;    // Devanagari
  if (cp >= 0x3040 && cp <= 0x30FF) return true;  // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;  // CJK unified
  if (cp >= 0xAC00 && cp <= 0xD7AF) return true;  // Hangul
  return false;
}

}  // namespace smteval::utf8
