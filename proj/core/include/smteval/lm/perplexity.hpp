#ifndef SMTEVAL_LM_PERPLEXITY_HPP
#define SMTEVAL_LM_PERPLEXITY_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "smteval/errors.hpp"
#include "smteval/lm/counts.hpp"

namespace smteval::lm {

/// Walks the scoring events of a corpus for a model with the given order
/// and boundary convention: with markers, every token plus one
/// end-of-sentence event per sentence, the first words conditioned on
/// begin padding; without markers, the tokens alone.
template <class Fn>
void for_each_scoring_event(int order, bool boundary_markers,
                            std::span<const TokenizedSentence> corpus, Fn&& fn) {
  const std::size_t context = order > 0 ? static_cast<std::size_t>(order) - 1 : 0;
  std::vector<std::string> history;
  for (const auto& sentence : corpus) {
    history.clear();
    if (boundary_markers) history.assign(context, kSentenceBegin);
    auto emit = [&](const std::string& word) {
      fn(std::span<const std::string>(history), word);
      if (context > 0) {
        history.push_back(word);
        if (history.size() > context) history.erase(history.begin());
      }
    };
    for (const auto& word : sentence) emit(word);
    if (boundary_markers) emit(kSentenceEnd);
  }
}

/// exp(-(1/N) sum ln p(w|h)) over the corpus.
template <class Model>
double perplexity(const Model& model, std::span<const TokenizedSentence> corpus) {
  if (corpus.empty()) throw EmptyInputError("perplexity: empty corpus");
  double log_sum = 0.0;
  std::int64_t events = 0;
  for_each_scoring_event(model.order(), model.boundary_markers(), corpus,
                         [&](std::span<const std::string> history, const std::string& word) {
                           log_sum += std::log(model.prob(history, word));
                           ++events;
                         });
  if (events == 0) throw EmptyInputError("perplexity: no tokens to score");
  return std::exp(-log_sum / static_cast<double>(events));
}

}  // namespace smteval::lm

#endif
