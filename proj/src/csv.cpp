#include "boundent/csv.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "boundent/baths.hpp"

namespace boundent {

void write_csv(std::ostream& out, const ResultSet& results, const ScenarioConfig& cfg) {
  out << "# boundent scenario output\n";
  out << "# version = " << kVersion << '\n';
  out << "# prng = " << kPrngName << '\n';
  out << "# seed = " << cfg.seed << '\n';
  std::istringstream config(to_text(cfg));
  for (std::string line; std::getline(config, line);) out << "# config: " << line << '\n';

  const auto columns = results.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const ResultRow& row : results.rows) {
    bool first = true;
    for (const auto* part : {&row.axes, &row.values})
      for (double x : *part) {
        out << (first ? "" : ",") << format_number(x);
        first = false;
      }
    out << '\n';
  }
}

void emit_csv(const ResultSet& results, const ScenarioConfig& cfg, const std::string& path) {
  if (results.rows.empty()) throw IoError("emit_csv: no rows to write");
  if (path == "-") {
    write_csv(std::cout, results, cfg);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(out, results, cfg);
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace boundent

namespace boundent {

void write_matrix_csv(std::ostream& out, const Matrix9cd& m) {
  for (int i = 0; i < kPairDim; ++i) {
    for (int j = 0; j < kPairDim; ++j)
      out << (j ? "," : "") << format_number(m(i, j).real()) << ',' << format_number(m(i, j).imag());
    out << '\n';
  }
}

Matrix9cd read_matrix_csv(std::istream& in) {
  Matrix9cd m;
  int row = 0;
  for (std::string line; std::getline(in, line);) {
    if (const auto first = line.find_first_not_of(" \t\r"); first == std::string::npos || line[first] == '#') continue;
    if (row == kPairDim) throw IoError("matrix CSV has more than 9 rows");
    std::vector<double> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) {
      try {
        std::size_t used = 0;
        cells.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw IoError("matrix CSV row " + std::to_string(row + 1) + ": bad number '" + cell + "'");
      }
    }
    if (cells.size() == 2 * kPairDim) {
      for (int j = 0; j < kPairDim; ++j) m(row, j) = {cells[2 * j], cells[2 * j + 1]};
    } else if (cells.size() == kPairDim) {
      for (int j = 0; j < kPairDim; ++j) m(row, j) = cells[j];
    } else {
      throw IoError("matrix CSV row " + std::to_string(row + 1) + ": expected 9 or 18 columns, got " +
                    std::to_string(cells.size()));
    }
    ++row;
  }
  if (row != kPairDim) throw IoError("matrix CSV has " + std::to_string(row) + " rows, expected 9");
  return m;
}

}  // namespace boundent
