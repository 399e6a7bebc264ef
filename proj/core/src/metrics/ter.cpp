#include "smteval/metrics/ter.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "smteval/errors.hpp"

namespace smteval::metrics {

namespace {

constexpr std::size_t kMaxShiftLength = 10;
constexpr std::size_t kExactSearchLimit = 8;

std::int64_t edit_distance(const TokenizedSentence& cand, const TokenizedSentence& ref) {
  const std::size_t m = cand.size(), n = ref.size();
  std::vector<std::int64_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t sub = prev[j - 1] + (cand[i - 1] == ref[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::string join(const TokenizedSentence& tokens, std::size_t start, std::size_t len) {
  std::string key = tokens[start];
  for (std::size_t j = 1; j < len; ++j) {
    key.push_back(' ');
    key += tokens[start + j];
  }
  return key;
}

std::string join_all(const TokenizedSentence& tokens) {
  return tokens.empty() ? std::string() : join(tokens, 0, tokens.size());
}

// blocks that occur verbatim in the reference, precomputed once
std::unordered_set<std::string> reference_blocks(const TokenizedSentence& ref) {
  std::unordered_set<std::string> blocks;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::string key;
    for (std::size_t len = 1; len <= kMaxShiftLength && i + len <= ref.size(); ++len) {
      if (len > 1) key.push_back(' ');
      key += ref[i + len - 1];
      blocks.insert(key);
    }
  }
  return blocks;
}

TokenizedSentence apply_shift(const TokenizedSentence& seq, std::size_t start, std::size_t len,
                              std::size_t dest) {
  TokenizedSentence rest;
  rest.reserve(seq.size());
  rest.insert(rest.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start));
  rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(start + len), seq.end());
  TokenizedSentence out;
  out.reserve(seq.size());
  out.insert(out.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(dest));
  out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(start),
             seq.begin() + static_cast<std::ptrdiff_t>(start + len));
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(dest), rest.end());
  return out;
}

template <class Fn>
void for_each_shift(const TokenizedSentence& seq, const std::unordered_set<std::string>& blocks,
                    Fn&& fn) {
  const std::size_t n = seq.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::string key;
    for (std::size_t len = 1; len <= kMaxShiftLength && start + len <= n; ++len) {
      if (len > 1) key.push_back(' ');
      key += seq[start + len - 1];
      if (!blocks.contains(key)) continue;
      for (std::size_t dest = 0; dest + len <= n; ++dest) {
        if (dest == start) continue;
        fn(start, len, dest);
      }
    }
  }
}

struct ShiftOutcome {
  TokenizedSentence sequence;
  std::int64_t shifts = 0;
  std::int64_t distance = 0;
};

// minimum of shifts + edit distance over all shift sequences; uniform-cost
// search by shift count with duplicate suppression
ShiftOutcome exact_shift_search(const TokenizedSentence& cand, const TokenizedSentence& ref,
                                const std::unordered_set<std::string>& blocks) {
  ShiftOutcome best{cand, 0, edit_distance(cand, ref)};
  std::int64_t best_total = best.distance;
  std::unordered_set<std::string> visited{join_all(cand)};
  std::vector<TokenizedSentence> level{cand};
  std::int64_t g = 0;
  while (!level.empty() && g + 1 < best_total) {
    std::vector<TokenizedSentence> next;
    for (const auto& seq : level) {
      for_each_shift(seq, blocks, [&](std::size_t start, std::size_t len, std::size_t dest) {
        TokenizedSentence shifted = apply_shift(seq, start, len, dest);
        if (!visited.insert(join_all(shifted)).second) return;
        const std::int64_t d = edit_distance(shifted, ref);
        if (g + 1 + d < best_total) {
          best_total = g + 1 + d;
          best = {shifted, g + 1, d};
        }
        next.push_back(std::move(shifted));
      });
    }
    level = std::move(next);
    ++g;
  }
  return best;
}

// repeatedly take the shift with the largest distance reduction; ties go
// to the smallest (start, length, destination)
ShiftOutcome greedy_shift_search(const TokenizedSentence& cand, const TokenizedSentence& ref,
                                 const std::unordered_set<std::string>& blocks) {
  ShiftOutcome state{cand, 0, edit_distance(cand, ref)};
  while (true) {
    std::int64_t best_reduction = 0;
    TokenizedSentence best_seq;
    for_each_shift(state.sequence, blocks,
                   [&](std::size_t start, std::size_t len, std::size_t dest) {
                     TokenizedSentence shifted = apply_shift(state.sequence, start, len, dest);
                     const std::int64_t reduction = state.distance - edit_distance(shifted, ref);
                     if (reduction > best_reduction) {
                       best_reduction = reduction;
                       best_seq = std::move(shifted);
                     }
                   });
    if (best_reduction <= 0) break;
    state.sequence = std::move(best_seq);
    state.shifts += 1;
    state.distance -= best_reduction;
  }
  return state;
}

// ins/del/sub decomposition of the residual edit distance; traceback
// prefers diagonal, then deletion, then insertion
void decompose(const TokenizedSentence& cand, const TokenizedSentence& ref, TerReport& report) {
  const std::size_t m = cand.size(), n = ref.size();
  std::vector<std::vector<std::int64_t>> d(m + 1, std::vector<std::int64_t>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) d[i][0] = static_cast<std::int64_t>(i);
  for (std::size_t j = 0; j <= n; ++j) d[0][j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t sub = d[i - 1][j - 1] + (cand[i - 1] == ref[j - 1] ? 0 : 1);
      d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        d[i][j] == d[i - 1][j - 1] + (cand[i - 1] == ref[j - 1] ? 0 : 1)) {
      if (cand[i - 1] != ref[j - 1]) report.substitutions += 1;
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      report.deletions += 1;
      --i;
    } else {
      report.insertions += 1;
      --j;
    }
  }
}

TerReport ter_against(const TokenizedSentence& cand, const TokenizedSentence& ref) {
  if (ref.empty()) throw EmptyInputError("ter: empty reference");
  const auto blocks = reference_blocks(ref);
  const bool exact = cand.size() <= kExactSearchLimit && ref.size() <= kExactSearchLimit;
  const ShiftOutcome outcome = exact ? exact_shift_search(cand, ref, blocks)
                                     : greedy_shift_search(cand, ref, blocks);
  TerReport report;
  report.shifts = outcome.shifts;
  report.reference_length = static_cast<std::int64_t>(ref.size());
  decompose(outcome.sequence, ref, report);
  report.score =
      100.0 * static_cast<double>(report.edits()) / static_cast<double>(report.reference_length);
  return report;
}

}  // namespace

TerReport ter(const EvalPair& pair) {
  if (pair.references.empty()) throw EmptyInputError("ter: pair without references");
  TerReport best = ter_against(pair.candidate, pair.references.front());
  for (std::size_t i = 1; i < pair.references.size(); ++i) {
    const TerReport r = ter_against(pair.candidate, pair.references[i]);
    if (r.edits() < best.edits()) best = r;
  }
  return best;
}

TerReport ter_corpus(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw EmptyInputError("ter: no evaluation pairs");
  TerReport total;
  for (const auto& pair : pairs) {
    const TerReport r = ter(pair);
    total.insertions += r.insertions;
    total.deletions += r.deletions;
    total.substitutions += r.substitutions;
    total.shifts += r.shifts;
    total.reference_length += r.reference_length;
  }
  total.score =
      100.0 * static_cast<double>(total.edits()) / static_cast<double>(total.reference_length);
  return total;
}

}  // namespace smteval::metrics
