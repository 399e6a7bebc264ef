#include "smteval/text/truecase.hpp"

#include <istream>
#include <ostream>

#include "smteval/errors.hpp"
#include "smteval/utf8.hpp"

namespace smteval::text {

TruecaseModel train_truecaser(std::span<const TokenizedSentence> corpus) {
  if (corpus.empty()) throw EmptyInputError("truecaser: empty corpus");
  // key -> surface form -> count, over non-sentence-initial positions
  std::map<std::string, std::map<std::string, std::int64_t>> forms;
  for (const auto& sentence : corpus) {
    for (std::size_t i = 1; i < sentence.size(); ++i) {
      forms[utf8::to_lower(sentence[i])][sentence[i]] += 1;
    }
  }
  TruecaseModel model;
  for (const auto& [key, candidates] : forms) {
    std::int64_t total = 0;
    const std::string* best = nullptr;
    std::int64_t best_count = 0;
    for (const auto& [form, count] : candidates) {
      total += count;
      // std::map iteration is lexicographic, so > keeps the smallest form
      // among equals.
      if (count > best_count) {
        best = &form;
        best_count = count;
      }
    }
    model.best_form[key] = *best;
    model.evidence[key] = total;
  }
  return model;
}

TokenizedSentence truecase(const TokenizedSentence& sentence, const TruecaseModel& model) {
  if (sentence.empty()) return sentence;
  TokenizedSentence out = sentence;
  const std::string key = utf8::to_lower(out[0]);
  auto it = model.best_form.find(key);
  out[0] = it != model.best_form.end() ? it->second : key;
  return out;
}

void TruecaseModel::save(std::ostream& out) const {
  for (const auto& [key, form] : best_form) {
    auto ev = evidence.find(key);
    out << key << '\t' << form << '\t' << (ev == evidence.end() ? 0 : ev->second) << '\n';
  }
}

TruecaseModel TruecaseModel::load(std::istream& in) {
  TruecaseModel model;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("truecase model line " + std::to_string(lineno) + ": expected 3 columns");
    }
    const std::string key = line.substr(0, tab1);
    model.best_form[key] = line.substr(tab1 + 1, tab2 - tab1 - 1);
    model.evidence[key] = std::stoll(line.substr(tab2 + 1));
  }
  return model;
}

}  // namespace smteval::text
