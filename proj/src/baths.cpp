#include "boundent/baths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace boundent {

std::string_view to_string(BathKind kind) {
  switch (kind) {
    case BathKind::bosonic:
      return "bosonic";
    case BathKind::spin:
      return "spin";
    case BathKind::analytic_gaussian:
      return "analytic_gaussian";
    case BathKind::analytic_exponential:
      return "analytic_exponential";
  }
  return "unknown";
}

BathKind parse_bath_kind(std::string_view name) {
  for (BathKind k : {BathKind::bosonic, BathKind::spin, BathKind::analytic_gaussian, BathKind::analytic_exponential})
    if (to_string(k) == name) return k;
  throw BadKind("unknown bath kind '" + std::string(name) + "'");
}

namespace {

void check_physical(double coupling, double temperature, const std::vector<double>& frequencies) {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw BadRange("bath coupling must be finite and > 0");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) throw BadRange("bath temperature must be finite and >= 0");
  if (frequencies.empty()) throw BadRange("bath needs at least one mode");
  for (double w : frequencies)
    if (!(w > 0.0) || !std::isfinite(w)) throw BadRange("bath frequencies must be finite and > 0");
}

// tanh(w/T) with the T = 0 limit taken exactly.
double spin_polarization(double omega, double temperature) {
  return temperature == 0.0 ? 1.0 : std::tanh(omega / temperature);
}

// 1/cosh^2(w/T) with the T = 0 limit taken exactly.
double sech_squared(double omega, double temperature) {
  if (temperature == 0.0) return 0.0;
  const double c = std::cosh(omega / temperature);
  return 1.0 / (c * c);
}

void require_kind(const BathSpec& bath, BathKind kind, const char* op) {
  if (bath.kind() != kind)
    throw BadKind(std::string(op) + ": bath kind is " + std::string(to_string(bath.kind())));
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw BadRange("time must be finite and >= 0");
}

// Decay exponent S and phase P of the bosonic bath, so that
// F_{M,N} = exp(-(M-N)^2 S) exp(i (M^2-N^2) P). Summed in mode order.
struct BosonicExponents {
  double decay = 0.0;
  double phase = 0.0;
};

BosonicExponents bosonic_exponents(const BathSpec& bath, double t) {
  const double g2 = bath.coupling() * bath.coupling();
  BosonicExponents e;
  for (double w : bath.frequencies()) {
    const double s = std::sin(0.5 * w * t);
    e.decay += (2.0 * thermal_occupation(w, bath.temperature()) + 1.0) * (2.0 * g2 / (w * w)) * s * s;
    e.phase += (g2 / (w * w)) * (w * t - std::sin(w * t));
  }
  return e;
}

std::complex<double> bosonic_entry(const BosonicExponents& e, int m, int n) {
  const double d = m - n;
  return std::polar(std::exp(-d * d * e.decay), e.phase * (m * m - n * n));
}

// prod_k [cos th_k + i tanh sin th_k] with th_k = (g/2) * steps * w_k * t.
std::complex<double> spin_product(const BathSpec& bath, double t, int steps) {
  std::complex<double> f(1.0, 0.0);
  for (double w : bath.frequencies()) {
    const double theta = 0.5 * bath.coupling() * steps * w * t;
    f *= std::complex<double>(std::cos(theta), spin_polarization(w, bath.temperature()) * std::sin(theta));
  }
  return f;
}

double analytic_modulus(BathKind kind, double rate, double t, int diff) {
  const double quarter_sq = 0.25 * diff * diff;
  return kind == BathKind::analytic_gaussian ? std::exp(-rate * t * t * quarter_sq) : std::exp(-rate * t * quarter_sq);
}

}  // namespace

BathSpec::BathSpec(BathKind kind, double coupling, double temperature, std::vector<double> frequencies, double rate)
    : kind_(kind), coupling_(coupling), temperature_(temperature), frequencies_(std::move(frequencies)), rate_(rate) {}

BathSpec BathSpec::bosonic(double coupling, double temperature, std::vector<double> frequencies) {
  check_physical(coupling, temperature, frequencies);
  return BathSpec(BathKind::bosonic, coupling, temperature, std::move(frequencies), 0.0);
}

BathSpec BathSpec::spin(double coupling, double temperature, std::vector<double> frequencies) {
  check_physical(coupling, temperature, frequencies);
  return BathSpec(BathKind::spin, coupling, temperature, std::move(frequencies), 0.0);
}

BathSpec BathSpec::analytic(BathKind kind, double rate) {
  if (!is_analytic(kind)) throw BadKind("BathSpec::analytic needs an analytic kind");
  if (!(rate > 0.0) || !std::isfinite(rate)) throw BadRate("analytic bath rate must be finite and > 0");
  return BathSpec(kind, 0.0, 0.0, {}, rate);
}

std::vector<double> sample_frequencies(double lo, double delta, int count, std::uint64_t seed) {
  if (count < 1) throw BadRange("sample_frequencies: need at least one mode");
  if (!std::isfinite(lo) || !std::isfinite(delta) || delta < 0.0) throw BadRange("sample_frequencies: bad range");
  if (!(lo > 0.0 || (lo == 0.0 && delta > 0.0)))
    throw BadRange("sample_frequencies: range must lie in (0, inf) or be [0, delta] with delta > 0");

  std::mt19937_64 engine(seed);
  std::vector<double> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const double w = lo + delta * u;
    if (w > 0.0) out.push_back(w);
  }
  return out;
}

double thermal_occupation(double omega, double temperature) {
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / temperature);
}

FactorTable FactorTable::identity(double t) { return FactorTable(t, Matrix5cd::Ones()); }

FactorTable FactorTable::from_entries(double t, const Matrix5cd& entries) {
  if (!entries.allFinite()) throw InvariantViolation("factor table has non-finite entries");
  for (int i = 0; i < 5; ++i) {
    if (entries(i, i) != std::complex<double>(1.0, 0.0))
      throw InvariantViolation("factor table diagonal must be exactly 1");
    for (int j = 0; j < 5; ++j) {
      if (std::abs(entries(i, j)) > 1.0 + 1e-12) throw InvariantViolation("factor table entry has modulus > 1");
      if (std::abs(entries(i, j) - std::conj(entries(j, i))) > 1e-12)
        throw InvariantViolation("factor table is not conjugate symmetric");
    }
  }
  return FactorTable(t, entries);
}

std::complex<double> bosonic_factor(const BathSpec& bath, double t, SzLabel m, SzLabel n) {
  require_kind(bath, BathKind::bosonic, "bosonic_factor");
  require_time(t);
  if (m == n) return 1.0;
  return bosonic_entry(bosonic_exponents(bath, t), m.value(), n.value());
}

std::complex<double> spin_factor(const BathSpec& bath, double t, SzLabel m, SzLabel n) {
  require_kind(bath, BathKind::spin, "spin_factor");
  require_time(t);
  if (m == n) return 1.0;
  return spin_product(bath, t, n.value() - m.value());
}

double analytic_factor(BathKind kind, double rate, double t, SzLabel m, SzLabel n) {
  if (!is_analytic(kind)) throw BadKind("analytic_factor: kind must be analytic_gaussian or analytic_exponential");
  if (!(rate > 0.0)) throw BadRate("analytic_factor: rate must be > 0");
  require_time(t);
  if (m == n) return 1.0;
  return analytic_modulus(kind, rate, t, m.value() - n.value());
}

FactorTable factor_table(const BathSpec& bath, double t) {
  require_time(t);
  FactorTable::Matrix5cd f = FactorTable::Matrix5cd::Ones();
  switch (bath.kind()) {
    case BathKind::bosonic: {
      const BosonicExponents e = bosonic_exponents(bath, t);
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          f(i, j) = bosonic_entry(e, kSzValues[i], kSzValues[j]);
          f(j, i) = std::conj(f(i, j));
        }
      break;
    }
    case BathKind::spin: {
      // Depends only on N - M; one product per distance.
      std::array<std::complex<double>, 5> by_distance{};
      for (int d = 1; d < 5; ++d) by_distance[d] = spin_product(bath, t, d);
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          f(i, j) = by_distance[j - i];
          f(j, i) = std::conj(f(i, j));
        }
      break;
    }
    case BathKind::analytic_gaussian:
    case BathKind::analytic_exponential:
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (i != j) f(i, j) = analytic_modulus(bath.kind(), bath.rate(), t, i - j);
      break;
  }
  return FactorTable::from_entries(t, f);
}

double gaussian_rate(const BathSpec& bath, int cutoff_count) {
  if (bath.kind() != BathKind::bosonic && bath.kind() != BathKind::spin)
    throw BadKind("gaussian_rate: needs a bosonic or spin bath");
  if (cutoff_count < 1 || static_cast<std::size_t>(cutoff_count) > bath.size())
    throw BadCutoff("gaussian_rate: cutoff must be in [1, L]");

  std::vector<double> w = bath.frequencies();
  std::sort(w.begin(), w.end());
  const double g2 = bath.coupling() * bath.coupling();
  double sum = 0.0;
  for (int j = 0; j < cutoff_count; ++j) {
    if (bath.kind() == BathKind::bosonic)
      sum += 2.0 * thermal_occupation(w[j], bath.temperature()) + 1.0;
    else
      sum += w[j] * w[j] * sech_squared(w[j], bath.temperature());
  }
  return bath.kind() == BathKind::bosonic ? 2.0 * g2 * sum : 0.5 * g2 * sum;
}

double gaussian_rate(const BathSpec& bath) { return gaussian_rate(bath, static_cast<int>(bath.size())); }

double interval_bound(double coupling, int mode_count, double omega1, double omega2, double t) {
  if (!(omega1 > 0.0 && omega1 < omega2) || !std::isfinite(omega2))
    throw BadRange("interval_bound: need 0 < omega1 < omega2");
  if (!(coupling > 0.0) || mode_count < 1) throw BadRange("interval_bound: need G > 0 and at least one mode");
  require_time(t);

  // bracket = 1 - cos(A t) sinc(B t), A = (w2+w1)/2, B = (w2-w1)/2, written
  // as 2 sin^2(A t/2) + cos(A t) (1 - sinc(B t)) so that t -> 0 stays accurate.
  const double a = 0.5 * (omega2 + omega1) * t;
  const double b = 0.5 * (omega2 - omega1) * t;
  const double one_minus_sinc = std::abs(b) < 1e-3 ? b * b / 6.0 - b * b * b * b / 120.0 : 1.0 - std::sin(b) / b;
  const double half = std::sin(0.5 * a);
  const double bracket = 2.0 * half * half + std::cos(a) * one_minus_sinc;
  return -2.0 * coupling * coupling * mode_count / (omega2 * omega2) * bracket;
}

}  // namespace boundent
