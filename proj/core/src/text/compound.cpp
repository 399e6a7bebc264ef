#include "smteval/text/compound.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "smteval/utf8.hpp"

namespace smteval::text {

namespace {

struct Segmentation {
  std::vector<std::string> parts;
  std::vector<std::size_t> part_lengths;  // in codepoints
  double avg_log_count = 0.0;
};

// gm desc, then fewest parts, then leftmost-longest part sequence
bool better(const Segmentation& a, const Segmentation& b) {
  constexpr double kEps = 1e-9;
  if (a.avg_log_count > b.avg_log_count + kEps) return true;
  if (a.avg_log_count < b.avg_log_count - kEps) return false;
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  return a.part_lengths > b.part_lengths;
}

}  // namespace

std::vector<std::string> split_compounds(const std::string& token, const FrequencyTable& table,
                                         std::size_t min_part_len,
                                         const std::set<std::string>& fillers) {
  if (min_part_len == 0) min_part_len = 1;
  const std::vector<char32_t> cps = utf8::decode(token);
  const std::size_t n = cps.size();
  if (n < 2 * min_part_len) return {token};

  std::vector<std::vector<char32_t>> filler_cps;
  for (const auto& f : fillers) {
    if (!f.empty()) filler_cps.push_back(utf8::decode(f));
  }

  auto piece = [&](std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) utf8::append(out, cps[i]);
    return out;
  };

  std::optional<Segmentation> best;
  std::vector<std::string> parts;
  std::vector<std::size_t> lengths;
  std::vector<double> logs;

  auto consider = [&] {
    if (parts.size() < 2) return;
    std::vector<double> sorted = logs;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    Segmentation seg{parts, lengths, sum / static_cast<double>(parts.size())};
    if (!best || better(seg, *best)) best = std::move(seg);
  };

  auto search = [&](auto&& self, std::size_t from) -> void {
    if (from == n) {
      consider();
      return;
    }
    for (std::size_t to = from + min_part_len; to <= n; ++to) {
      const std::string part = piece(from, to);
      const std::int64_t count = table.count(part);
      if (count < 1) continue;
      parts.push_back(part);
      lengths.push_back(to - from);
      logs.push_back(std::log(static_cast<double>(count)));
      self(self, to);
      // a filler may sit between this part and the next one
      for (const auto& f : filler_cps) {
        if (to + f.size() >= n) continue;
        if (std::equal(f.begin(), f.end(), cps.begin() + static_cast<std::ptrdiff_t>(to))) {
          self(self, to + f.size());
        }
      }
      parts.pop_back();
      lengths.pop_back();
      logs.pop_back();
    }
  };
  search(search, 0);

  if (!best) return {token};
  const std::int64_t own = table.count(token);
  const double own_log = own > 0 ? std::log(static_cast<double>(own)) : -1e300;
  if (best->avg_log_count > own_log) return best->parts;
  return {token};
}

}  // namespace smteval::text
