#ifndef SMTEVAL_STATS_SCORE_TABLE_HPP
#define SMTEVAL_STATS_SCORE_TABLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "smteval/metrics/normalize.hpp"

namespace smteval::stats {

/// Per-system normalized metric scores for one translation direction.
/// CSV form: header "system,bleu,nist,meteor,ter", one row per system.
struct ScoreTable {
  struct Row {
    std::string system;
    double bleu = 0.0;
    double nist = 0.0;
    double meteor = 0.0;
    double ter = 0.0;
  };

  std::string direction;  // e.g. "pl-en"
  std::vector<Row> rows;

  std::vector<double> column(metrics::Metric metric) const;
};

ScoreTable load_score_table(std::istream& in, const std::string& direction);
ScoreTable load_score_table(const std::string& path, const std::string& direction);
void save_score_table(const ScoreTable& table, std::ostream& out);

/// The toolkit's bundled per-system evaluation tables (Polish-to-English
/// and English-to-Polish), the inputs of the reproduce-paper command.
const ScoreTable& bundled_pl_en_table();
const ScoreTable& bundled_en_pl_table();

}  // namespace smteval::stats

#endif
