#ifndef SMTEVAL_ALIGN_ALIGNMENT_HPP
#define SMTEVAL_ALIGN_ALIGNMENT_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace smteval::align {

/// A link between source token s and target token t, 0-based.
struct AlignmentPoint {
  int s = 0;
  int t = 0;
  auto operator<=>(const AlignmentPoint&) const = default;
};

/// One direction of a word alignment. Points are a set: duplicates
/// collapse, iteration is row-major (s, then t).
struct DirectedAlignment {
  std::set<AlignmentPoint> points;
  int source_len = 0;
  int target_len = 0;
};

/// Parses whitespace-separated "s-t" pairs. With transpose set, input
/// pairs are read as "t-s" (reverse-direction files in their native
/// coordinates). Throws ParseError for non-integer or out-of-range
/// entries.
DirectedAlignment parse_alignment(std::string_view text, int source_len, int target_len,
                                  bool transpose = false);

/// Renders points as sorted "s-t" pairs separated by single spaces.
std::string format_alignment(const DirectedAlignment& alignment);

}  // namespace smteval::align

#endif
