#include "smteval/lm/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "smteval/errors.hpp"

namespace smteval::lm {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::pair<std::string, std::string> header_row(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("model file: truncated header");
  const auto tab = line.find('\t');
  if (tab == std::string::npos) throw ParseError("model file: malformed header line '" + line + "'");
  return {line.substr(0, tab), line.substr(tab + 1)};
}

}  // namespace

void save_model(const NGramModel& model, std::ostream& out) {
  std::int64_t entries = 0;
  for (int k = 1; k <= model.order(); ++k) {
    entries += static_cast<std::int64_t>(model.gram_probs(k).size());
  }
  out << "smteval-lm\t1\n";
  out << "order\t" << model.order() << '\n';
  out << "smoothing\t" << to_string(model.smoothing()) << '\n';
  out << "vocabulary\t" << model.vocabulary().size() << '\n';
  out << "boundary-markers\t" << (model.boundary_markers() ? 1 : 0) << '\n';
  out << "degenerate-discounts\t" << (model.degenerate_discounts() ? 1 : 0) << '\n';
  out << "ngrams\t" << entries << '\n';
  for (int k = 1; k <= model.order(); ++k) {
    const auto* backoffs =
        k <= model.order() - 1 ? &model.history_backoffs(k) : nullptr;
    for (const auto& [gram, p] : model.gram_probs(k)) {
      out << k << '\t' << gram << '\t' << format_double(std::log10(p));
      if (backoffs != nullptr) {
        const auto it = backoffs->find(gram);
        if (it != backoffs->end()) out << '\t' << format_double(std::log10(it->second));
      }
      out << '\n';
    }
  }
}

void save_model(const NGramModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  save_model(model, out);
}

NGramModel load_model(std::istream& in) {
  auto magic = header_row(in);
  if (magic.first != "smteval-lm") throw ParseError("model file: missing smteval-lm header");

  int order = 0;
  Smoothing smoothing = Smoothing::WittenBell;
  bool boundary_markers = false;
  bool degenerate = false;
  std::int64_t entries = -1;
  while (entries < 0) {
    auto [key, value] = header_row(in);
    if (key == "order") {
      order = std::stoi(value);
    } else if (key == "smoothing") {
      smoothing = smoothing_from_string(value);
    } else if (key == "vocabulary") {
      // redundant with the unigram rows; ignored
    } else if (key == "boundary-markers") {
      boundary_markers = value == "1";
    } else if (key == "degenerate-discounts") {
      degenerate = value == "1";
    } else if (key == "ngrams") {
      entries = std::stoll(value);
    } else {
      throw ParseError("model file: unknown header key '" + key + "'");
    }
  }
  if (order < 1) throw ParseError("model file: bad order");

  std::vector<std::map<std::string, double>> probs(static_cast<std::size_t>(order));
  std::vector<std::map<std::string, double>> backoffs(
      order > 1 ? static_cast<std::size_t>(order - 1) : 0);
  std::string line;
  for (std::int64_t i = 0; i < entries; ++i) {
    if (!std::getline(in, line)) throw ParseError("model file: truncated entries");
    std::istringstream row(line);
    std::string order_field, gram, prob_field, backoff_field;
    if (!std::getline(row, order_field, '\t') || !std::getline(row, gram, '\t') ||
        !std::getline(row, prob_field, '\t')) {
      throw ParseError("model file: malformed entry '" + line + "'");
    }
    const int k = std::stoi(order_field);
    if (k < 1 || k > order || ngram_length(gram) != k) {
      throw ParseError("model file: entry order mismatch in '" + line + "'");
    }
    probs[static_cast<std::size_t>(k - 1)][gram] = std::pow(10.0, std::stod(prob_field));
    if (std::getline(row, backoff_field, '\t')) {
      if (k > order - 1) throw ParseError("model file: backoff on a top-order entry");
      backoffs[static_cast<std::size_t>(k - 1)][gram] = std::pow(10.0, std::stod(backoff_field));
    }
  }
  if (probs[0].empty()) throw ParseError("model file: no unigram entries");
  return NGramModel::assemble(order, smoothing, boundary_markers, degenerate, std::move(probs),
                              std::move(backoffs));
}

NGramModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return load_model(in);
}

}  // namespace smteval::lm
