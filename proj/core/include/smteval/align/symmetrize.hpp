#ifndef SMTEVAL_ALIGN_SYMMETRIZE_HPP
#define SMTEVAL_ALIGN_SYMMETRIZE_HPP

#include <string_view>

#include "smteval/align/alignment.hpp"

namespace smteval::align {

enum class SymmetrizationHeuristic {
  Intersection,
  Union,
  Grow,
  GrowDiag,
  GrowDiagFinal,
  GrowDiagFinalAnd,
};

std::string_view to_string(SymmetrizationHeuristic h);

/// Accepts the spelled-out names: "intersection", "union", "grow",
/// "grow-diag", "grow-diag-final", "grow-diag-final-and".
SymmetrizationHeuristic heuristic_from_string(std::string_view name);

/// Merges two directed alignments given in the same (s,t) coordinates.
///
/// Grow and GrowDiag start from the intersection and repeatedly add union
/// points adjacent (4- or 8-neighbourhood) to the current set, restricted
/// to points with at least one endpoint left uncovered by the
/// intersection. That predicate is fixed up front, so the closure is the
/// same set no matter the scan order. The Final variants then take the
/// coverage left by the grow stage and add every remaining union point
/// with at least one uncovered endpoint (GrowDiagFinal) or with both
/// endpoints uncovered (GrowDiagFinalAnd), forward points considered
/// before reverse ones.
///
/// For every input: Intersection <= Grow <= GrowDiag <= GrowDiagFinalAnd
/// <= GrowDiagFinal <= Union (set containment), and symmetrize(a, a, h)
/// == a.points for all h.
///
/// Throws DimensionError when the two alignments disagree on lengths.
DirectedAlignment symmetrize(const DirectedAlignment& forward, const DirectedAlignment& reverse,
                             SymmetrizationHeuristic heuristic);

}  // namespace smteval::align

#endif
