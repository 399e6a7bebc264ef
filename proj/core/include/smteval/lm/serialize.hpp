#ifndef SMTEVAL_LM_SERIALIZE_HPP
#define SMTEVAL_LM_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "smteval/lm/model.hpp"

namespace smteval::lm {

/// Plain-text model format: a small tab-separated header (order,
/// smoothing, vocabulary size, marker flags, entry count) followed by one
/// sorted row per n-gram:
///
///   order <TAB> ngram <TAB> log10prob [<TAB> log10 backoff]
///
/// The backoff column appears on rows whose n-gram also acts as a history
/// with continuations. Output is byte-for-byte identical across runs for
/// the same model.
void save_model(const NGramModel& model, std::ostream& out);
void save_model(const NGramModel& model, const std::string& path);

NGramModel load_model(std::istream& in);
NGramModel load_model(const std::string& path);

}  // namespace smteval::lm

#endif
