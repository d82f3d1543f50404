#pragma once

// Scenario configuration: a flat key = value text format.
//
//   # comment
//   name        = fig1                 (free label)
//   state       = horodecki | upb
//   a           = 4                    (horodecki only, 2 <= a <= 5)
//   bath        = bosonic | spin | analytic_gaussian | analytic_exponential
//   L           = 200                  (physical baths: number of modes)
//   g           = 2                    (physical baths: coupling)
//   T           = 1                    (physical baths: temperature)
//   lo          = 50                   (frequencies drawn uniformly on [lo, lo+delta])
//   delta       = 5
//   frequencies = 50.5, 51, 53.2       (explicit list, replaces L/lo/delta)
//   gamma       = 1                    (analytic baths: decay rate)
//   seed        = 1
//   t           = 0                    (time used when t is not swept)
//   sweep       = t:0:0.5:201          (variable:lo:hi:steps)
//   sweep2      = L:200,1000,5000      (variable:v1,v2,... strictly increasing)
//   outputs     = R, N, absF1, absF3, rho_dump
//   output      = out.csv              ("-" for stdout)
//   threads     = 1
//
// Sweep variables: t, T, g, delta, L, a. The first axis is the outer loop.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boundent/baths.hpp"

namespace boundent {

enum class InitialState { horodecki, upb };
enum class SweepVariable { t, T, g, delta, L, a };
enum class Quantity { R, N, absF1, absF3, rho_dump };

std::string_view to_string(InitialState s);
std::string_view to_string(SweepVariable v);
std::string_view to_string(Quantity q);

struct SweepAxis {
  SweepVariable variable = SweepVariable::t;
  /// Either an evenly spaced range (lo, hi, steps) or an explicit list.
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
  std::vector<double> list;

  static SweepAxis range(SweepVariable v, double lo, double hi, int steps);
  static SweepAxis values(SweepVariable v, std::vector<double> values);

  bool is_list() const { return !list.empty(); }
  std::vector<double> grid() const;
};

struct BathConfig {
  BathKind kind = BathKind::bosonic;
  int size = 200;
  double coupling = 1.0;
  double temperature = 0.0;
  double lo = 50.0;
  double delta = 5.0;
  std::vector<double> frequencies;
  double rate = 1.0;
};

struct ScenarioConfig {
  std::string name;
  InitialState initial_state = InitialState::horodecki;
  double a = 4.0;
  BathConfig bath;
  std::uint64_t seed = 1;
  double time = 0.0;
  std::vector<SweepAxis> sweep;
  std::vector<Quantity> outputs;
  std::string output_path = "-";
  int threads = 1;

  /// Throws ConfigError on the first problem found.
  void validate() const;
};

/// Parses and validates. Throws ConfigError with a line number on failure.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Canonical text form; parse_config(to_text(c)) reproduces c.
std::string to_text(const ScenarioConfig& config);

/// printf("%.17g"): 17 significant digits, enough to round-trip a double.
std::string format_number(double x);

}  // namespace boundent
