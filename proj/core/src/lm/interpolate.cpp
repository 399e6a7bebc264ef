#include "smteval/lm/interpolate.hpp"

#include <algorithm>
#include <cmath>

#include "smteval/errors.hpp"
#include "smteval/lm/perplexity.hpp"

namespace smteval::lm {

namespace {

void validate_weights(std::size_t models, std::span<const double> weights) {
  if (models < 2) throw EmptyInputError("interpolate: need at least two models");
  if (weights.size() != models) {
    throw DimensionError("interpolate: one weight per model required");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw RangeError("interpolate: weights must lie in [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw RangeError("interpolate: weights must sum to 1");
}

}  // namespace

InterpolatedModel::InterpolatedModel(std::vector<NGramModel> components,
                                     std::vector<double> weights)
    : components_(std::move(components)), weights_(std::move(weights)) {
  validate_weights(components_.size(), weights_);
}

double InterpolatedModel::prob(std::span<const std::string> history,
                               std::string_view word) const {
  double p = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (weights_[i] > 0.0) p += weights_[i] * components_[i].prob(history, word);
  }
  return p;
}

int InterpolatedModel::order() const {
  int order = 1;
  for (const auto& m : components_) order = std::max(order, m.order());
  return order;
}

bool InterpolatedModel::boundary_markers() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const NGramModel& m) { return m.boundary_markers(); });
}

InterpolatedModel interpolate(std::vector<NGramModel> models, std::vector<double> weights) {
  return InterpolatedModel(std::move(models), std::move(weights));
}

namespace {

// weight vectors on the simplex grid, lexicographically descending so the
// first optimum found carries the most weight on the first model
template <class Emit>
void enumerate_grid(std::size_t models, std::int64_t steps, std::vector<std::int64_t>& current,
                    Emit&& emit) {
  std::int64_t used = 0;
  for (auto v : current) used += v;
  if (current.size() == models - 1) {
    current.push_back(steps - used);
    emit(current);
    current.pop_back();
    return;
  }
  for (std::int64_t v = steps - used; v >= 0; --v) {
    current.push_back(v);
    enumerate_grid(models, steps, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<double> tune_weights(std::span<const NGramModel> models,
                                 std::span<const TokenizedSentence> heldout,
                                 double grid_step) {
  if (models.size() < 2) throw EmptyInputError("tune_weights: need at least two models");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw RangeError("tune_weights: grid step must lie in (0,1]");
  }
  if (heldout.empty()) throw EmptyInputError("tune_weights: empty held-out corpus");

  // component probabilities per scoring event do not depend on the
  // weights, so compute them once
  int order = 1;
  bool boundaries = true;
  for (const auto& m : models) {
    order = std::max(order, m.order());
    boundaries = boundaries && m.boundary_markers();
  }
  std::vector<std::vector<double>> event_probs;
  for_each_scoring_event(order, boundaries, heldout,
                         [&](std::span<const std::string> history, const std::string& word) {
                           std::vector<double> probs(models.size());
                           for (std::size_t i = 0; i < models.size(); ++i) {
                             probs[i] = models[i].prob(history, word);
                           }
                           event_probs.push_back(std::move(probs));
                         });
  if (event_probs.empty()) throw EmptyInputError("tune_weights: no tokens to score");

  const auto steps = std::max<std::int64_t>(1, std::llround(1.0 / grid_step));
  std::vector<double> best_weights;
  double best_log = 0.0;
  std::vector<std::int64_t> current;
  enumerate_grid(models.size(), steps, current, [&](const std::vector<std::int64_t>& grid) {
    std::vector<double> weights(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      weights[i] = static_cast<double>(grid[i]) / static_cast<double>(steps);
    }
    double log_sum = 0.0;
    for (const auto& probs : event_probs) {
      double p = 0.0;
      for (std::size_t i = 0; i < probs.size(); ++i) p += weights[i] * probs[i];
      log_sum += std::log(p);
    }
    // tolerance keeps float noise from breaking the ties-to-first rule
    const double margin = 1e-9 * std::max(1.0, std::abs(best_log));
    if (best_weights.empty() || log_sum > best_log + margin) {
      best_log = log_sum;
      best_weights = weights;
    }
  });
  return best_weights;
}

}  // namespace smteval::lm
