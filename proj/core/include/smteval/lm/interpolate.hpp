#ifndef SMTEVAL_LM_INTERPOLATE_HPP
#define SMTEVAL_LM_INTERPOLATE_HPP

#include <span>
#include <vector>

#include "smteval/lm/model.hpp"

namespace smteval::lm {

/// Linear mixture of component models: p(w|h) = sum_i w_i p_i(w|h).
/// Each component resolves out-of-vocabulary tokens through its own <unk>.
class InterpolatedModel {
 public:
  InterpolatedModel(std::vector<NGramModel> components, std::vector<double> weights);

  double prob(std::span<const std::string> history, std::string_view word) const;
  int order() const;
  bool boundary_markers() const;

  const std::vector<NGramModel>& components() const { return components_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<NGramModel> components_;
  std::vector<double> weights_;
};

/// Validates weights (each in [0,1], summing to 1 within 1e-9, one per
/// model, at least two models) and builds the mixture. Throws RangeError
/// on invalid weights, DimensionError on a size mismatch, EmptyInputError
/// for fewer than two models.
InterpolatedModel interpolate(std::vector<NGramModel> models, std::vector<double> weights);

/// Grid search minimizing held-out perplexity of the mixture; the grid
/// enumerates weight vectors in steps of grid_step over the simplex.
/// Ties go to the lexicographically largest vector, i.e. the most weight
/// on the first (in-domain) model.
std::vector<double> tune_weights(std::span<const NGramModel> models,
                                 std::span<const TokenizedSentence> heldout,
                                 double grid_step = 0.05);

}  // namespace smteval::lm

#endif
