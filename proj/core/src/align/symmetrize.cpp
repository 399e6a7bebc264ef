#include "smteval/align/symmetrize.hpp"

#include <algorithm>
#include <vector>

#include "smteval/errors.hpp"

namespace smteval::align {

std::string_view to_string(SymmetrizationHeuristic h) {
  switch (h) {
    case SymmetrizationHeuristic::Intersection: return "intersection";
    case SymmetrizationHeuristic::Union: return "union";
    case SymmetrizationHeuristic::Grow: return "grow";
    case SymmetrizationHeuristic::GrowDiag: return "grow-diag";
    case SymmetrizationHeuristic::GrowDiagFinal: return "grow-diag-final";
    case SymmetrizationHeuristic::GrowDiagFinalAnd: return "grow-diag-final-and";
  }
  return "unknown";
}

SymmetrizationHeuristic heuristic_from_string(std::string_view name) {
  if (name == "intersection") return SymmetrizationHeuristic::Intersection;
  if (name == "union") return SymmetrizationHeuristic::Union;
  if (name == "grow") return SymmetrizationHeuristic::Grow;
  if (name == "grow-diag") return SymmetrizationHeuristic::GrowDiag;
  if (name == "grow-diag-final") return SymmetrizationHeuristic::GrowDiagFinal;
  if (name == "grow-diag-final-and") return SymmetrizationHeuristic::GrowDiagFinalAnd;
  throw ParseError("unknown symmetrization heuristic '" + std::string(name) + "'");
}

namespace {

struct Coverage {
  std::vector<char> source;
  std::vector<char> target;

  Coverage(int source_len, int target_len)
      : source(static_cast<std::size_t>(source_len), 0),
        target(static_cast<std::size_t>(target_len), 0) {}

  void add(const AlignmentPoint& p) {
    source[static_cast<std::size_t>(p.s)] = 1;
    target[static_cast<std::size_t>(p.t)] = 1;
  }
  bool source_covered(const AlignmentPoint& p) const {
    return source[static_cast<std::size_t>(p.s)] != 0;
  }
  bool target_covered(const AlignmentPoint& p) const {
    return target[static_cast<std::size_t>(p.t)] != 0;
  }
};

bool adjacent(const AlignmentPoint& a, const AlignmentPoint& b, bool diagonal) {
  const int ds = a.s > b.s ? a.s - b.s : b.s - a.s;
  const int dt = a.t > b.t ? a.t - b.t : b.t - a.t;
  if (diagonal) return ds <= 1 && dt <= 1 && (ds + dt) > 0;
  return ds + dt == 1;
}

// Closure of the intersection under neighbour growth. Candidate points
// are union points with an endpoint the intersection leaves uncovered;
// that predicate does not change while growing, so the fixpoint is
// independent of scan order.
std::set<AlignmentPoint> grow(const std::set<AlignmentPoint>& inter,
                              const std::set<AlignmentPoint>& uni, int source_len, int target_len,
                              bool diagonal) {
  Coverage base(source_len, target_len);
  for (const auto& p : inter) base.add(p);

  std::vector<AlignmentPoint> candidates;
  for (const auto& p : uni) {
    if (inter.contains(p)) continue;
    if (!base.source_covered(p) || !base.target_covered(p)) candidates.push_back(p);
  }

  std::set<AlignmentPoint> result = inter;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = candidates.begin(); it != candidates.end();) {
      const bool touches = std::any_of(result.begin(), result.end(), [&](const AlignmentPoint& q) {
        return adjacent(*it, q, diagonal);
      });
      if (touches) {
        result.insert(*it);
        it = candidates.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return result;
}

}  // namespace

DirectedAlignment symmetrize(const DirectedAlignment& forward, const DirectedAlignment& reverse,
                             SymmetrizationHeuristic heuristic) {
  if (forward.source_len != reverse.source_len || forward.target_len != reverse.target_len) {
    throw DimensionError("symmetrize: alignments disagree on sentence lengths");
  }
  DirectedAlignment out;
  out.source_len = forward.source_len;
  out.target_len = forward.target_len;

  std::set<AlignmentPoint> inter;
  std::set<AlignmentPoint> uni = forward.points;
  uni.insert(reverse.points.begin(), reverse.points.end());
  std::set_intersection(forward.points.begin(), forward.points.end(), reverse.points.begin(),
                        reverse.points.end(), std::inserter(inter, inter.begin()));

  switch (heuristic) {
    case SymmetrizationHeuristic::Intersection:
      out.points = std::move(inter);
      return out;
    case SymmetrizationHeuristic::Union:
      out.points = std::move(uni);
      return out;
    case SymmetrizationHeuristic::Grow:
      out.points = grow(inter, uni, out.source_len, out.target_len, false);
      return out;
    case SymmetrizationHeuristic::GrowDiag:
      out.points = grow(inter, uni, out.source_len, out.target_len, true);
      return out;
    case SymmetrizationHeuristic::GrowDiagFinal:
    case SymmetrizationHeuristic::GrowDiagFinalAnd:
      break;
  }

  std::set<AlignmentPoint> grown = grow(inter, uni, out.source_len, out.target_len, true);
  Coverage cover(out.source_len, out.target_len);
  for (const auto& p : grown) cover.add(p);

  const bool need_both = heuristic == SymmetrizationHeuristic::GrowDiagFinalAnd;
  // Uncovered-word status is taken from the grow stage's coverage, so the
  // forward-then-reverse scan below cannot change the outcome.
  for (const auto* side : {&forward.points, &reverse.points}) {
    for (const auto& p : *side) {
      if (grown.contains(p)) continue;
      const bool s_free = !cover.source_covered(p);
      const bool t_free = !cover.target_covered(p);
      if (need_both ? (s_free && t_free) : (s_free || t_free)) grown.insert(p);
    }
  }
  out.points = std::move(grown);
  return out;
}

}  // namespace smteval::align
