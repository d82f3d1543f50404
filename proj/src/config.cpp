#include "boundent/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace boundent {

std::string_view to_string(InitialState s) { return s == InitialState::horodecki ? "horodecki" : "upb"; }

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::t:
      return "t";
    case SweepVariable::T:
      return "T";
    case SweepVariable::g:
      return "g";
    case SweepVariable::delta:
      return "delta";
    case SweepVariable::L:
      return "L";
    case SweepVariable::a:
      return "a";
  }
  return "?";
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::R:
      return "R";
    case Quantity::N:
      return "N";
    case Quantity::absF1:
      return "absF1";
    case Quantity::absF3:
      return "absF3";
    case Quantity::rho_dump:
      return "rho_dump";
  }
  return "?";
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SweepAxis SweepAxis::range(SweepVariable v, double lo, double hi, int steps) {
  SweepAxis axis;
  axis.variable = v;
  axis.lo = lo;
  axis.hi = hi;
  axis.steps = steps;
  return axis;
}

SweepAxis SweepAxis::values(SweepVariable v, std::vector<double> values) {
  SweepAxis axis;
  axis.variable = v;
  axis.list = std::move(values);
  return axis;
}

std::vector<double> SweepAxis::grid() const {
  if (is_list()) return list;
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i)
    out[i] = i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return out;
}

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const Enum (&all)[N], const char* what) {
  for (Enum e : all)
    if (to_string(e) == text) return e;
  throw ConfigError(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

constexpr SweepVariable kAllVariables[] = {SweepVariable::t, SweepVariable::T,     SweepVariable::g,
                                           SweepVariable::delta, SweepVariable::L, SweepVariable::a};
constexpr Quantity kAllQuantities[] = {Quantity::R, Quantity::N, Quantity::absF1, Quantity::absF3,
                                       Quantity::rho_dump};
constexpr InitialState kAllStates[] = {InitialState::horodecki, InitialState::upb};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
    throw ConfigError("expected a number, got '" + std::string(s) + "'");
  return x;
}

template <typename Int>
Int parse_int(std::string_view s) {
  s = trim(s);
  Int x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("expected an integer, got '" + std::string(s) + "'");
  return x;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

SweepAxis parse_axis(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ConfigError("sweep must look like var:lo:hi:steps or var:v1,v2,...");
  const SweepVariable v = parse_enum(trim(s.substr(0, colon)), kAllVariables, "sweep variable");
  const std::string_view rest = s.substr(colon + 1);
  if (rest.find(':') == std::string_view::npos) return SweepAxis::values(v, parse_list(rest));
  const auto parts = split(rest, ':');
  if (parts.size() != 3) throw ConfigError("sweep range must be var:lo:hi:steps");
  return SweepAxis::range(v, parse_double(parts[0]), parse_double(parts[1]), parse_int<int>(parts[2]));
}

std::string list_text(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + format_number(values[i]);
  return out;
}

std::string axis_text(const SweepAxis& axis) {
  std::string out(to_string(axis.variable));
  out += ':';
  if (axis.is_list()) {
    for (std::size_t i = 0; i < axis.list.size(); ++i) out += (i ? "," : "") + format_number(axis.list[i]);
  } else {
    out += format_number(axis.lo) + ":" + format_number(axis.hi) + ":" + std::to_string(axis.steps);
  }
  return out;
}

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

void ScenarioConfig::validate() const {
  const bool physical = !is_analytic(bath.kind);
  if (initial_state == InitialState::horodecki && !(a >= 2.0 && a <= 5.0))
    throw ConfigError("a must lie in [2, 5]");
  if (!(time >= 0.0)) throw ConfigError("t must be >= 0");
  if (physical) {
    if (!(bath.coupling > 0.0)) throw ConfigError("g must be > 0");
    if (!(bath.temperature >= 0.0)) throw ConfigError("T must be >= 0");
    if (bath.frequencies.empty()) {
      if (bath.size < 1) throw ConfigError("L must be >= 1");
      if (!(bath.delta >= 0.0)) throw ConfigError("delta must be >= 0");
      if (!(bath.lo > 0.0 || (bath.lo == 0.0 && bath.delta > 0.0)))
        throw ConfigError("frequency range must be lo > 0, or lo = 0 with delta > 0");
    } else {
      for (double w : bath.frequencies)
        if (!(w > 0.0)) throw ConfigError("frequencies must be > 0");
    }
  } else if (!(bath.rate > 0.0)) {
    throw ConfigError("gamma must be > 0 for analytic baths");
  }

  if (sweep.empty() || sweep.size() > 2) throw ConfigError("need one or two sweep axes");
  if (sweep.size() == 2 && sweep[0].variable == sweep[1].variable) throw ConfigError("sweep axes must differ");
  for (const SweepAxis& axis : sweep) {
    const std::string name(to_string(axis.variable));
    if (axis.is_list()) {
      if (axis.list.size() < 2) throw ConfigError("sweep " + name + ": need at least 2 values");
      if (!std::is_sorted(axis.list.begin(), axis.list.end(), std::less_equal<>()))
        throw ConfigError("sweep " + name + ": values must be strictly increasing");
    } else {
      if (axis.steps < 2) throw ConfigError("sweep " + name + ": steps must be >= 2");
      if (!(axis.lo < axis.hi)) throw ConfigError("sweep " + name + ": need lo < hi");
    }
    const auto grid = axis.grid();
    const double min = grid.front();
    switch (axis.variable) {
      case SweepVariable::t:
        if (min < 0.0) throw ConfigError("sweep t: times must be >= 0");
        break;
      case SweepVariable::a:
        if (initial_state != InitialState::horodecki) throw ConfigError("sweep a: needs state = horodecki");
        if (min < 2.0 || grid.back() > 5.0) throw ConfigError("sweep a: values must lie in [2, 5]");
        break;
      case SweepVariable::T:
      case SweepVariable::g:
      case SweepVariable::delta:
      case SweepVariable::L:
        if (!physical) throw ConfigError("sweep " + name + ": not a parameter of analytic baths");
        if (axis.variable == SweepVariable::T && min < 0.0) throw ConfigError("sweep T: must be >= 0");
        if (axis.variable == SweepVariable::g && !(min > 0.0)) throw ConfigError("sweep g: must be > 0");
        if ((axis.variable == SweepVariable::delta || axis.variable == SweepVariable::L) && !bath.frequencies.empty())
          throw ConfigError("sweep " + name + ": incompatible with an explicit frequency list");
        if (axis.variable == SweepVariable::delta && (min < 0.0 || (bath.lo == 0.0 && !(min > 0.0))))
          throw ConfigError("sweep delta: invalid frequency range");
        if (axis.variable == SweepVariable::L)
          for (double x : grid)
            if (x < 1.0 || !is_integer(x)) throw ConfigError("sweep L: values must be positive integers");
        break;
    }
  }

  if (outputs.empty()) throw ConfigError("outputs must name at least one quantity");
  if (output_path.empty()) throw ConfigError("output path is empty");
  if (threads < 1) throw ConfigError("threads must be >= 1");
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  cfg.sweep.clear();
  std::optional<SweepAxis> first;
  std::optional<SweepAxis> second;
  std::set<std::string> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "sweep1") key = "sweep";
    if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");

    try {
      if (key == "name") {
        cfg.name = std::string(value);
      } else if (key == "state") {
        cfg.initial_state = parse_enum(value, kAllStates, "state");
      } else if (key == "a") {
        cfg.a = parse_double(value);
      } else if (key == "bath") {
        try {
          cfg.bath.kind = parse_bath_kind(value);
        } catch (const BadKind& e) {
          throw ConfigError(e.what());
        }
      } else if (key == "L") {
        cfg.bath.size = parse_int<int>(value);
      } else if (key == "g") {
        cfg.bath.coupling = parse_double(value);
      } else if (key == "T") {
        cfg.bath.temperature = parse_double(value);
      } else if (key == "lo") {
        cfg.bath.lo = parse_double(value);
      } else if (key == "delta") {
        cfg.bath.delta = parse_double(value);
      } else if (key == "frequencies") {
        cfg.bath.frequencies = parse_list(value);
      } else if (key == "gamma") {
        cfg.bath.rate = parse_double(value);
      } else if (key == "seed") {
        cfg.seed = parse_int<std::uint64_t>(value);
      } else if (key == "t") {
        cfg.time = parse_double(value);
      } else if (key == "sweep") {
        first = parse_axis(value);
      } else if (key == "sweep2") {
        second = parse_axis(value);
      } else if (key == "outputs") {
        for (auto part : split(value, ',')) cfg.outputs.push_back(parse_enum(part, kAllQuantities, "output"));
      } else if (key == "output") {
        cfg.output_path = std::string(value);
      } else if (key == "threads") {
        cfg.threads = parse_int<int>(value);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }

  if (second && !first) throw ConfigError("sweep2 given without sweep");
  if (first) cfg.sweep.push_back(*first);
  if (second) cfg.sweep.push_back(*second);
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_text(const ScenarioConfig& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "name = " << c.name << '\n';
  out << "state = " << to_string(c.initial_state) << '\n';
  if (c.initial_state == InitialState::horodecki) out << "a = " << format_number(c.a) << '\n';
  out << "bath = " << to_string(c.bath.kind) << '\n';
  if (is_analytic(c.bath.kind)) {
    out << "gamma = " << format_number(c.bath.rate) << '\n';
  } else {
    out << "g = " << format_number(c.bath.coupling) << '\n';
    out << "T = " << format_number(c.bath.temperature) << '\n';
    if (c.bath.frequencies.empty()) {
      out << "L = " << c.bath.size << '\n';
      out << "lo = " << format_number(c.bath.lo) << '\n';
      out << "delta = " << format_number(c.bath.delta) << '\n';
    } else {
      out << "frequencies = " << list_text(c.bath.frequencies) << '\n';
    }
  }
  out << "seed = " << c.seed << '\n';
  out << "t = " << format_number(c.time) << '\n';
  for (std::size_t i = 0; i < c.sweep.size(); ++i)
    out << (i == 0 ? "sweep = " : "sweep2 = ") << axis_text(c.sweep[i]) << '\n';
  out << "outputs = ";
  for (std::size_t i = 0; i < c.outputs.size(); ++i) out << (i ? ", " : "") << to_string(c.outputs[i]);
  out << '\n';
  out << "output = " << c.output_path << '\n';
  out << "threads = " << c.threads << '\n';
  return out.str();
}

}  // namespace boundent
