#include "smteval/text/corpus.hpp"

#include <fstream>
#include <istream>

#include "smteval/errors.hpp"
#include "smteval/utf8.hpp"

namespace smteval::text {

std::vector<RawLine> read_lines(std::istream& in, const std::string& name) {
  std::vector<RawLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8::is_valid(line)) {
      throw EncodingError(name + ":" + std::to_string(number) + ": invalid UTF-8");
    }
    lines.push_back({line, number});
  }
  return lines;
}

std::vector<RawLine> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return read_lines(in, path);
}

std::string detokenize(const TokenizedSentence& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace smteval::text
