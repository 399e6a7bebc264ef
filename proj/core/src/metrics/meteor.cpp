#include "smteval/metrics/meteor.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "smteval/errors.hpp"

namespace smteval::metrics {

namespace {

// Minimum chunk count over all maximum matchings of identical tokens.
// Depth-first search over candidate positions, branch-and-bound on the
// chunk count; trying the run-extending reference position first finds
// the optimum early, so the bound prunes hard.
class ChunkSearch {
 public:
  ChunkSearch(const TokenizedSentence& cand, const TokenizedSentence& ref)
      : cand_(cand), used_(ref.size(), false) {
    std::unordered_map<std::string, std::int64_t> cand_count;
    for (const auto& t : cand) cand_count[t] += 1;
    for (std::size_t j = 0; j < ref.size(); ++j) ref_positions_[ref[j]].push_back(j);
    for (const auto& [token, positions] : ref_positions_) {
      const auto it = cand_count.find(token);
      if (it == cand_count.end()) continue;
      quota_[token] = std::min<std::int64_t>(it->second,
                                             static_cast<std::int64_t>(positions.size()));
      total_matches_ += quota_[token];
    }
    for (const auto& t : cand) avail_[t] += 1;
  }

  std::int64_t matches() const { return total_matches_; }

  std::int64_t min_chunks() {
    if (total_matches_ == 0) return 0;
    best_ = total_matches_ + 1;
    remaining_ = total_matches_;
    nodes_ = 0;
    dfs(0, 0, -2, -2);
    return best_;
  }

 private:
  static constexpr std::int64_t kNodeBudget = 1 << 20;

  void dfs(std::size_t i, std::int64_t chunks, std::ptrdiff_t prev_i, std::ptrdiff_t prev_j) {
    if (chunks >= best_) return;
    if (remaining_ == 0) {
      best_ = chunks;
      return;
    }
    if (i >= cand_.size() || ++nodes_ > kNodeBudget) return;

    const std::string& token = cand_[i];
    const auto quota_it = quota_.find(token);
    const bool matchable = quota_it != quota_.end() && quota_it->second > 0;

    if (matchable) {
      const auto& positions = ref_positions_[token];
      std::vector<std::size_t> order;
      order.reserve(positions.size());
      const bool consecutive = static_cast<std::ptrdiff_t>(i) == prev_i + 1;
      for (const auto j : positions) {
        if (!used_[j] && consecutive && static_cast<std::ptrdiff_t>(j) == prev_j + 1) {
          order.push_back(j);
        }
      }
      for (const auto j : positions) {
        if (!used_[j] && !(consecutive && static_cast<std::ptrdiff_t>(j) == prev_j + 1)) {
          order.push_back(j);
        }
      }
      for (const auto j : order) {
        const bool extends = consecutive && static_cast<std::ptrdiff_t>(j) == prev_j + 1;
        used_[j] = true;
        quota_it->second -= 1;
        remaining_ -= 1;
        dfs(i + 1, chunks + (extends ? 0 : 1), static_cast<std::ptrdiff_t>(i),
            static_cast<std::ptrdiff_t>(j));
        remaining_ += 1;
        quota_it->second += 1;
        used_[j] = false;
      }
    }

    // skip this occurrence when later ones can still fill the quota
    const auto avail_it = avail_.find(token);
    const std::int64_t still_needed = matchable ? quota_it->second : 0;
    if (avail_it->second - 1 >= still_needed) {
      avail_it->second -= 1;
      dfs(i + 1, chunks, prev_i, prev_j);
      avail_it->second += 1;
    }
  }

  const TokenizedSentence& cand_;
  std::unordered_map<std::string, std::vector<std::size_t>> ref_positions_;
  std::unordered_map<std::string, std::int64_t> quota_;
  std::unordered_map<std::string, std::int64_t> avail_;
  std::vector<bool> used_;
  std::int64_t total_matches_ = 0;
  std::int64_t best_ = 0;
  std::int64_t remaining_ = 0;
  std::int64_t nodes_ = 0;
};

MeteorReport score_from_stats(std::int64_t m, std::int64_t ch, std::int64_t cand_len,
                              std::int64_t ref_len) {
  MeteorReport report;
  report.matches = m;
  report.chunks = ch;
  report.candidate_length = cand_len;
  report.reference_length = ref_len;
  if (m == 0 || cand_len == 0 || ref_len == 0) return report;
  report.precision = static_cast<double>(m) / static_cast<double>(cand_len);
  report.recall = static_cast<double>(m) / static_cast<double>(ref_len);
  report.fmean =
      10.0 * report.precision * report.recall / (report.recall + 9.0 * report.precision);
  const double frag = static_cast<double>(ch) / static_cast<double>(m);
  report.penalty = 0.5 * frag * frag * frag;
  report.score = report.fmean * (1.0 - report.penalty);
  return report;
}

MeteorReport score_against(const TokenizedSentence& cand, const TokenizedSentence& ref) {
  ChunkSearch search(cand, ref);
  const std::int64_t m = search.matches();
  const std::int64_t ch = search.min_chunks();
  return score_from_stats(m, ch, static_cast<std::int64_t>(cand.size()),
                          static_cast<std::int64_t>(ref.size()));
}

}  // namespace

MeteorReport meteor(const EvalPair& pair) {
  if (pair.references.empty()) throw EmptyInputError("meteor: pair without references");
  MeteorReport best = score_against(pair.candidate, pair.references.front());
  for (std::size_t i = 1; i < pair.references.size(); ++i) {
    MeteorReport r = score_against(pair.candidate, pair.references[i]);
    if (r.score > best.score) best = r;
  }
  return best;
}

MeteorReport meteor_corpus(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw EmptyInputError("meteor: no evaluation pairs");
  std::int64_t m = 0, ch = 0, cand_len = 0, ref_len = 0;
  for (const auto& pair : pairs) {
    const MeteorReport r = meteor(pair);
    m += r.matches;
    ch += r.chunks;
    cand_len += r.candidate_length;
    ref_len += r.reference_length;
  }
  return score_from_stats(m, ch, cand_len, ref_len);
}

}  // namespace smteval::metrics
