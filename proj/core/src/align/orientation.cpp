#include "smteval/align/orientation.hpp"

#include "smteval/errors.hpp"

namespace smteval::align {

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Monotone: return "monotone";
    case Orientation::Swap: return "swap";
    case Orientation::DiscontinuousLeft: return "discontinuous-left";
    case Orientation::DiscontinuousRight: return "discontinuous-right";
    case Orientation::Discontinuous: return "discontinuous";
  }
  return "unknown";
}

Orientation classify_orientation(SourceSpan prev, SourceSpan cur, OrientationScheme scheme) {
  if (prev.first < 0 || cur.first < 0 || prev.last < prev.first || cur.last < cur.first) {
    throw RangeError("orientation: spans must be valid inclusive ranges");
  }
  if (cur.first <= prev.last && prev.first <= cur.last) {
    throw DimensionError("orientation: overlapping source spans");
  }
  if (cur.first == prev.last + 1) return Orientation::Monotone;
  if (cur.last == prev.first - 1) return Orientation::Swap;
  const bool right = cur.first > prev.last + 1;
  if (scheme == OrientationScheme::ThreeClass) return Orientation::Discontinuous;
  return right ? Orientation::DiscontinuousRight : Orientation::DiscontinuousLeft;
}

}  // namespace smteval::align
