#include "smteval/align/alignment.hpp"

#include <charconv>

#include "smteval/errors.hpp"

namespace smteval::align {

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
    throw ParseError("malformed alignment pair '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DirectedAlignment parse_alignment(std::string_view text, int source_len, int target_len,
                                  bool transpose) {
  if (source_len <= 0 || target_len <= 0) {
    throw DimensionError("alignment lengths must be positive");
  }
  DirectedAlignment alignment;
  alignment.source_len = source_len;
  alignment.target_len = target_len;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    const std::string_view pair = text.substr(pos, end - pos);
    pos = end;
    const auto dash = pair.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash == pair.size() - 1) {
      throw ParseError("malformed alignment pair '" + std::string(pair) + "'");
    }
    int a = parse_index(pair.substr(0, dash), pair);
    int b = parse_index(pair.substr(dash + 1), pair);
    if (transpose) std::swap(a, b);
    if (a >= source_len || b >= target_len) {
      throw ParseError("alignment pair '" + std::string(pair) + "' out of range for " +
                       std::to_string(source_len) + "x" + std::to_string(target_len));
    }
    alignment.points.insert({a, b});
  }
  return alignment;
}

std::string format_alignment(const DirectedAlignment& alignment) {
  std::string out;
  for (const auto& p : alignment.points) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(p.s);
    out.push_back('-');
    out += std::to_string(p.t);
  }
  return out;
}

}  // namespace smteval::align
