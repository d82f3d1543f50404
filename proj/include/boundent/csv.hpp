#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "boundent/config.hpp"
#include "boundent/scenario.hpp"

namespace boundent {

inline constexpr std::string_view kVersion = "0.1.0";

/// '#'-prefixed metadata block (version, PRNG, seed, full config), a header
/// row, then one line per row with 17 significant digits.
void write_csv(std::ostream& out, const ResultSet& results, const ScenarioConfig& cfg);

/// write_csv to a file, or to stdout when path is "-". Throws IoError.
void emit_csv(const ResultSet& results, const ScenarioConfig& cfg, const std::string& path);

}  // namespace boundent

#include "boundent/states.hpp"

namespace boundent {

/// Nine lines of eighteen columns: re, im of each entry, row by row.
void write_matrix_csv(std::ostream& out, const Matrix9cd& m);

/// Reads the format of write_matrix_csv. Rows of nine columns are read as
/// real. Blank lines and lines starting with '#' are skipped. Throws IoError.
Matrix9cd read_matrix_csv(std::istream& in);

}  // namespace boundent
