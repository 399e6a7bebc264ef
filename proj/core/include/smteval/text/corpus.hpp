#ifndef SMTEVAL_TEXT_CORPUS_HPP
#define SMTEVAL_TEXT_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace smteval::text {

/// One line of input text. Lines are rejected at ingestion when they are
/// not valid UTF-8; they are never silently repaired.
struct RawLine {
  std::string text;
  std::size_t line_number = 0;
};

using TokenizedSentence = std::vector<std::string>;

struct SentencePair {
  TokenizedSentence source;
  TokenizedSentence target;
  std::int64_t pair_id = 0;
};

/// Reads a UTF-8 text file, one sentence per line. Strips a trailing
/// carriage return per line. Throws EncodingError (with the line number)
/// on invalid UTF-8 and Error on unreadable files.
std::vector<RawLine> read_lines(const std::string& path);
std::vector<RawLine> read_lines(std::istream& in, const std::string& name);

/// Joining tokens with single spaces; tokenize(detokenize(t)) == t for any
/// tokenizer output.
std::string detokenize(const TokenizedSentence& tokens);

}  // namespace smteval::text

#endif
