#include "smteval/stats/score_table.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "smteval/errors.hpp"

namespace smteval::stats {

std::vector<double> ScoreTable::column(metrics::Metric metric) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    switch (metric) {
      case metrics::Metric::Bleu: out.push_back(row.bleu); break;
      case metrics::Metric::Nist: out.push_back(row.nist); break;
      case metrics::Metric::Meteor: out.push_back(row.meteor); break;
      case metrics::Metric::Ter: out.push_back(row.ter); break;
    }
  }
  return out;
}

ScoreTable load_score_table(std::istream& in, const std::string& direction) {
  ScoreTable table;
  table.direction = direction;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("score table: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "system,bleu,nist,meteor,ter") {
    throw ParseError("score table: expected header 'system,bleu,nist,meteor,ter'");
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    ScoreTable::Row r;
    std::string field;
    try {
      if (!std::getline(row, r.system, ',')) throw std::invalid_argument("system");
      if (!std::getline(row, field, ',')) throw std::invalid_argument("bleu");
      r.bleu = std::stod(field);
      if (!std::getline(row, field, ',')) throw std::invalid_argument("nist");
      r.nist = std::stod(field);
      if (!std::getline(row, field, ',')) throw std::invalid_argument("meteor");
      r.meteor = std::stod(field);
      if (!std::getline(row, field, ',')) throw std::invalid_argument("ter");
      r.ter = std::stod(field);
    } catch (const std::exception&) {
      throw ParseError("score table line " + std::to_string(lineno) + ": malformed row");
    }
    for (double v : {r.bleu, r.nist, r.meteor, r.ter}) {
      if (v < 0.0 || v > 100.0) {
        throw ParseError("score table line " + std::to_string(lineno) +
                         ": scores must lie in [0,100]");
      }
    }
    for (const auto& existing : table.rows) {
      if (existing.system == r.system) {
        throw ParseError("score table line " + std::to_string(lineno) + ": duplicate system id '" +
                         r.system + "'");
      }
    }
    table.rows.push_back(std::move(r));
  }
  if (table.rows.empty()) throw ParseError("score table: no rows");
  return table;
}

ScoreTable load_score_table(const std::string& path, const std::string& direction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return load_score_table(in, direction);
}

void save_score_table(const ScoreTable& table, std::ostream& out) {
  out << "system,bleu,nist,meteor,ter\n";
  char buf[128];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.2f,%.2f,%.2f,%.2f", row.system.c_str(), row.bleu,
                  row.nist, row.meteor, row.ter);
    out << buf << '\n';
  }
}

namespace {

ScoreTable make_table(std::string direction, std::vector<ScoreTable::Row> rows) {
  ScoreTable table;
  table.direction = std::move(direction);
  table.rows = std::move(rows);
  return table;
}

}  // namespace

const ScoreTable& bundled_pl_en_table() {
  static const ScoreTable table = make_table(
      "pl-en", {
                   {"00", 70.15, 70.23, 82.19, 70.62},
                   {"01", 64.58, 65.16, 76.04, 64.38},
                   {"02", 71.04, 70.76, 82.54, 71.67},
                   {"03", 71.22, 70.56, 82.39, 71.49},
                   {"04", 76.34, 73.30, 85.17, 75.23},
                   {"05", 70.33, 70.36, 82.28, 70.73},
                   {"06", 71.43, 70.70, 82.89, 71.27},
                   {"07", 71.91, 71.76, 83.63, 73.40},
                   {"08", 71.12, 69.16, 84.55, 70.05},
                   {"09", 71.32, 71.36, 83.31, 72.32},
                   {"10", 71.35, 69.36, 81.52, 70.26},
                   {"11", 70.34, 70.96, 82.65, 71.78},
                   {"12", 72.51, 71.36, 82.81, 71.81},
                   {"13", 76.97, 73.83, 86.11, 76.40},
               });
  return table;
}

const ScoreTable& bundled_en_pl_table() {
  static const ScoreTable table = make_table(
      "en-pl", {
                   {"00", 69.18, 67.63, 79.21, 69.61},
                   {"01", 61.15, 61.29, 71.91, 60.55},
                   {"02", 69.41, 67.63, 78.98, 69.10},
                   {"03", 68.45, 67.10, 78.63, 68.38},
                   {"04", 73.32, 69.90, 81.72, 72.95},
                   {"05", 69.21, 67.70, 79.26, 69.12},
                   {"06", 69.27, 67.76, 79.30, 68.73},
                   {"07", 68.43, 67.16, 78.95, 66.95},
                   {"08", 67.61, 65.83, 77.82, 70.05},
                   {"09", 68.98, 67.43, 78.90, 68.87},
                   {"10", 68.67, 66.83, 78.55, 68.08},
                   {"11", 69.01, 67.63, 79.13, 69.16},
                   {"12", 67.47, 65.96, 77.65, 66.68},
                   {"13", 73.67, 71.83, 82.13, 73.17},
                   {"14", 74.10, 72.16, 82.43, 74.03},
               });
  return table;
}

}  // namespace smteval::stats
