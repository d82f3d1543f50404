#include "boundent/scenario.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "boundent/dynamics.hpp"
#include "boundent/witnesses.hpp"

namespace boundent {

std::vector<std::string> ResultSet::columns() const {
  std::vector<std::string> out = axis_names;
  out.insert(out.end(), value_names.begin(), value_names.end());
  return out;
}

std::size_t ResultSet::value_index(const std::string& name) const {
  for (std::size_t i = 0; i < value_names.size(); ++i)
    if (value_names[i] == name) return i;
  throw std::out_of_range("no result column '" + name + "'");
}

namespace {

struct PointParams {
  double t;
  double temperature;
  double coupling;
  double delta;
  int size;
  double a;
};

void apply(PointParams& p, SweepVariable v, double x) {
  switch (v) {
    case SweepVariable::t:
      p.t = x;
      break;
    case SweepVariable::T:
      p.temperature = x;
      break;
    case SweepVariable::g:
      p.coupling = x;
      break;
    case SweepVariable::delta:
      p.delta = x;
      break;
    case SweepVariable::L:
      p.size = static_cast<int>(x);
      break;
    case SweepVariable::a:
      p.a = x;
      break;
  }
}

using FrequencyKey = std::pair<int, double>;

class GridEvaluator {
 public:
  GridEvaluator(const ScenarioConfig& cfg, const std::vector<std::vector<double>>& grids)
      : cfg_(cfg), grids_(grids), upb_(upb_state()) {
    // Frequencies are drawn once per (L, delta); lo and seed are fixed per run.
    if (!is_analytic(cfg.bath.kind) && cfg.bath.frequencies.empty()) {
      for (std::size_t index = 0; index < point_count(); ++index) {
        const PointParams p = params(index);
        const FrequencyKey key{p.size, p.delta};
        if (!frequencies_.count(key)) frequencies_[key] = sample_frequencies(cfg.bath.lo, p.delta, p.size, cfg.seed);
      }
    }
  }

  std::size_t point_count() const {
    std::size_t n = 1;
    for (const auto& g : grids_) n *= g.size();
    return n;
  }

  std::vector<double> axis_values(std::size_t index) const {
    std::vector<double> out(grids_.size());
    for (std::size_t k = grids_.size(); k-- > 0;) {
      out[k] = grids_[k][index % grids_[k].size()];
      index /= grids_[k].size();
    }
    return out;
  }

  PointParams params(std::size_t index) const {
    PointParams p{cfg_.time, cfg_.bath.temperature, cfg_.bath.coupling, cfg_.bath.delta, cfg_.bath.size, cfg_.a};
    const auto values = axis_values(index);
    for (std::size_t k = 0; k < values.size(); ++k) apply(p, cfg_.sweep[k].variable, values[k]);
    return p;
  }

  std::vector<double> evaluate(std::size_t index) const {
    const PointParams p = params(index);
    const bool horodecki = cfg_.initial_state == InitialState::horodecki;
    const DensityMatrix rho0 = horodecki ? horodecki_state(p.a) : upb_;
    const BathSpec bath = make_bath(p);

    const EvolvedState evolved = evolve(rho0, bath, p.t);
    const double r = realignment_witness(evolved.rho);
    const double n = negativity(evolved.rho);
    const double f1 = std::abs(evolved.factors.f1());
    const double f3 = std::abs(evolved.factors.f3());

    if (horodecki) {
      const double f2 = std::abs(evolved.factors.f2());
      const double r_closed = horodecki_R_closed(p.a, f1, f2, f3);
      const double n_closed = horodecki_N_closed(p.a, f1, f2, f3);
      if (std::abs(r - r_closed) > kPipelineTolerance || std::abs(n - n_closed) > kPipelineTolerance)
        throw InvariantViolation("matrix pipeline disagrees with closed form: R " + format_number(r) + " vs " +
                                 format_number(r_closed) + ", N " + format_number(n) + " vs " +
                                 format_number(n_closed));
    } else if (bath.kind() == BathKind::spin && n > kWitnessZeroTolerance) {
      throw InvariantViolation("spin-bath evolution of the UPB state produced negativity " + format_number(n));
    }

    std::vector<double> out;
    for (Quantity q : cfg_.outputs) {
      switch (q) {
        case Quantity::R:
          out.push_back(r);
          break;
        case Quantity::N:
          out.push_back(n);
          break;
        case Quantity::absF1:
          out.push_back(f1);
          break;
        case Quantity::absF3:
          out.push_back(f3);
          break;
        case Quantity::rho_dump:
          for (int i = 0; i < kPairDim; ++i)
            for (int j = 0; j < kPairDim; ++j) {
              out.push_back(evolved.rho(i, j).real());
              out.push_back(evolved.rho(i, j).imag());
            }
          break;
      }
    }
    return out;
  }

  std::string describe(std::size_t index) const {
    std::string out = "grid point";
    const auto values = axis_values(index);
    for (std::size_t k = 0; k < values.size(); ++k)
      out += std::string(k ? ", " : " ") + std::string(to_string(cfg_.sweep[k].variable)) + "=" +
             format_number(values[k]);
    return out;
  }

 private:
  BathSpec make_bath(const PointParams& p) const {
    if (is_analytic(cfg_.bath.kind)) return BathSpec::analytic(cfg_.bath.kind, cfg_.bath.rate);
    std::vector<double> freqs =
        cfg_.bath.frequencies.empty() ? frequencies_.at({p.size, p.delta}) : cfg_.bath.frequencies;
    return cfg_.bath.kind == BathKind::bosonic ? BathSpec::bosonic(p.coupling, p.temperature, std::move(freqs))
                                               : BathSpec::spin(p.coupling, p.temperature, std::move(freqs));
  }

  const ScenarioConfig& cfg_;
  const std::vector<std::vector<double>>& grids_;
  DensityMatrix upb_;
  std::map<FrequencyKey, std::vector<double>> frequencies_;
};

std::vector<std::string> value_names(const std::vector<Quantity>& outputs) {
  std::vector<std::string> names;
  for (Quantity q : outputs) {
    if (q != Quantity::rho_dump) {
      names.emplace_back(to_string(q));
      continue;
    }
    for (int i = 0; i < kPairDim; ++i)
      for (int j = 0; j < kPairDim; ++j) {
        const std::string suffix = std::to_string(i) + "_" + std::to_string(j);
        names.push_back("rho_re_" + suffix);
        names.push_back("rho_im_" + suffix);
      }
  }
  return names;
}

}  // namespace

ResultSet run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  std::vector<std::vector<double>> grids;
  ResultSet results;
  for (const SweepAxis& axis : cfg.sweep) {
    grids.push_back(axis.grid());
    results.axis_names.emplace_back(to_string(axis.variable));
  }
  results.value_names = value_names(cfg.outputs);

  const GridEvaluator evaluator(cfg, grids);
  const std::size_t count = evaluator.point_count();
  results.rows.resize(count);
  std::vector<std::exception_ptr> errors(count);

  auto work = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t i = worker; i < count; i += stride) {
      try {
        results.rows[i] = {evaluator.axis_values(i), evaluator.evaluate(i)};
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
    }
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), count);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  // Report the first failing point in grid order, independent of scheduling.
  for (std::size_t i = 0; i < count; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const InvariantViolation& e) {
      throw InvariantViolation(evaluator.describe(i) + ": " + e.what());
    } catch (const Error& e) {
      throw ConfigError(evaluator.describe(i) + ": " + e.what());
    }
  }
  return results;
}

}  // namespace boundent
