#ifndef SMTEVAL_ALIGN_ORIENTATION_HPP
#define SMTEVAL_ALIGN_ORIENTATION_HPP

#include <string_view>

namespace smteval::align {

enum class Orientation {
  Monotone,
  Swap,
  DiscontinuousLeft,
  DiscontinuousRight,
  Discontinuous,  // 3-class report of either discontinuous direction
};

enum class OrientationScheme { ThreeClass, FourClass };

std::string_view to_string(Orientation o);

/// Inclusive source-index span [first, last].
struct SourceSpan {
  int first = 0;
  int last = 0;
};

/// Classifies the relative order of the source projections of two
/// target-adjacent phrases: Monotone when cur starts right after prev,
/// Swap when cur ends right before prev, otherwise discontinuous with the
/// gap direction. Throws RangeError for malformed spans, DimensionError
/// when the spans overlap.
Orientation classify_orientation(SourceSpan prev, SourceSpan cur, OrientationScheme scheme);

}  // namespace smteval::align

#endif
