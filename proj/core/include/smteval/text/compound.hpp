#ifndef SMTEVAL_TEXT_COMPOUND_HPP
#define SMTEVAL_TEXT_COMPOUND_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "smteval/text/frequency.hpp"

namespace smteval::text {

/// Splits `token` into known sub-words when that pays off by corpus
/// frequency: among all segmentations into >= 2 parts, each at least
/// min_part_len codepoints long and attested in `table` (parts may be
/// separated by a filler string, which is dropped), picks the one with
/// the highest geometric mean of part counts. Returns its parts when
/// that mean strictly exceeds the token's own count, else {token}.
/// Ties: fewest parts first, then the leftmost-longest part sequence.
std::vector<std::string> split_compounds(const std::string& token, const FrequencyTable& table,
                                         std::size_t min_part_len = 3,
                                         const std::set<std::string>& fillers = {});

}  // namespace smteval::text

#endif
