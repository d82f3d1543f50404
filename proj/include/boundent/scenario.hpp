#pragma once

#include <string>
#include <vector>

#include "boundent/config.hpp"

namespace boundent {

/// Tolerance for the closed-form vs. matrix-pipeline check on Horodecki runs.
inline constexpr double kPipelineTolerance = 1e-9;

struct ResultRow {
  std::vector<double> axes;
  std::vector<double> values;
};

struct ResultSet {
  std::vector<std::string> axis_names;
  std::vector<std::string> value_names;
  std::vector<ResultRow> rows;

  std::vector<std::string> columns() const;
  /// Index into ResultRow::values; throws std::out_of_range for unknown names.
  std::size_t value_index(const std::string& name) const;
};

/// Evaluates every grid point of cfg. Rows come out in lexicographic order of
/// the axis values (first axis outer). Throws ConfigError for invalid configs
/// and InvariantViolation, with the grid point in the message, when a state
/// check or the closed-form cross-check fails.
ResultSet run_scenario(const ScenarioConfig& cfg);

}  // namespace boundent
