#include "smteval/text/normalize.hpp"

#include "smteval/utf8.hpp"

namespace smteval::text {

std::string normalize_punctuation(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  std::size_t pos = 0;
  bool prev_space = false;
  while (pos < line.size()) {
    char32_t cp = utf8::decode_next(line, pos);
    switch (cp) {
      case 0x201C: case 0x201D: case 0x201E: case 0x00AB: case 0x00BB:
        cp = U'"';
        break;
      case 0x2018: case 0x2019: case 0x201A:
        cp = U'\'';
        break;
      case 0x2013: case 0x2014:
        cp = U'-';
        break;
      case 0x00A0:
        cp = U' ';
        break;
      case 0x2026:
        out += "...";
        prev_space = false;
        continue;
      default:
        break;
    }
    if (cp == U' ') {
      if (prev_space) continue;
      prev_space = true;
    } else {
      prev_space = false;
    }
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace smteval::text
