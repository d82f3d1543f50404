#pragma once

// Environment models. Each model produces the complex decoherence factors
// F_{M,N}(t) that multiply the coherence |M><N| between total-S_z sectors
// M and N. Units: hbar = k_B = 1.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boundent/states.hpp"

namespace boundent {

enum class BathKind { bosonic, spin, analytic_gaussian, analytic_exponential };

std::string_view to_string(BathKind kind);
/// Throws BadKind for unknown names.
BathKind parse_bath_kind(std::string_view name);

inline bool is_analytic(BathKind kind) {
  return kind == BathKind::analytic_gaussian || kind == BathKind::analytic_exponential;
}

/// Immutable environment description. Physical kinds (bosonic, spin) carry a
/// coupling, a temperature and one frequency per mode; analytic kinds carry
/// only a decay rate.
class BathSpec {
 public:
  static BathSpec bosonic(double coupling, double temperature, std::vector<double> frequencies);
  static BathSpec spin(double coupling, double temperature, std::vector<double> frequencies);
  static BathSpec analytic(BathKind kind, double rate);

  BathKind kind() const { return kind_; }
  double coupling() const { return coupling_; }
  double temperature() const { return temperature_; }
  const std::vector<double>& frequencies() const { return frequencies_; }
  std::size_t size() const { return frequencies_.size(); }
  double rate() const { return rate_; }

 private:
  BathSpec(BathKind kind, double coupling, double temperature, std::vector<double> frequencies, double rate);

  BathKind kind_;
  double coupling_;
  double temperature_;
  std::vector<double> frequencies_;
  double rate_;
};

/// Identifier of the generator behind sample_frequencies(), recorded in output metadata.
inline constexpr std::string_view kPrngName = "std::mt19937_64, uniform = (x >> 11) * 2^-53";

/// L i.i.d. uniform draws on [lo, lo + delta]. Exact zeros are redrawn, so a
/// range starting at 0 never yields a zero frequency.
std::vector<double> sample_frequencies(double lo, double delta, int count, std::uint64_t seed);

/// Bose occupation 1 / (exp(omega / T) - 1); exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

/// Complex factors for all pairs of S_z eigenvalues at one time.
class FactorTable {
 public:
  using Matrix5cd = Eigen::Matrix<std::complex<double>, 5, 5>;

  /// Every factor equal to one: the identity channel.
  static FactorTable identity(double t = 0.0);
  /// Validates unit diagonal, conjugate symmetry and |F| <= 1 + 1e-12.
  static FactorTable from_entries(double t, const Matrix5cd& entries);

  double time() const { return t_; }
  std::complex<double> operator()(SzLabel m, SzLabel n) const { return entries_(m.slot(), n.slot()); }
  const Matrix5cd& entries() const { return entries_; }

  /// Coherence |00><11|, S_z pair (-2, 0).
  std::complex<double> f1() const { return (*this)(SzLabel(-2), SzLabel(0)); }
  /// Coherence |22><11|, S_z pair (2, 0).
  std::complex<double> f2() const { return (*this)(SzLabel(2), SzLabel(0)); }
  /// Coherence |00><22|, S_z pair (-2, 2).
  std::complex<double> f3() const { return (*this)(SzLabel(-2), SzLabel(2)); }

 private:
  FactorTable(double t, const Matrix5cd& entries) : t_(t), entries_(entries) {}
  double t_;
  Matrix5cd entries_;
};

/// Thermal bosonic bath: modulus exp(-(M-N)^2 sum_j (2n_j+1)(2g^2/w_j^2) sin^2(w_j t/2)),
/// phase (M^2 - N^2) sum_j (g^2/w_j^2)(w_j t - sin w_j t).
std::complex<double> bosonic_factor(const BathSpec& bath, double t, SzLabel m, SzLabel n);

/// Thermal spin-1/2 bath: prod_k [cos th_k + i tanh(w_k/T) sin th_k],
/// th_k = (g/2)(N-M) w_k t.
std::complex<double> spin_factor(const BathSpec& bath, double t, SzLabel m, SzLabel n);

/// Modulus-only models: exp(-rate t^2 (M-N)^2/4) or exp(-rate t (M-N)^2/4).
double analytic_factor(BathKind kind, double rate, double t, SzLabel m, SzLabel n);

/// Dispatches on bath.kind() and fills all 25 entries.
FactorTable factor_table(const BathSpec& bath, double t);

/// Short-time Gaussian rate over the cutoff_count lowest frequencies:
/// bosonic 2 g^2 sum (2n_j+1), spin (g^2/2) sum w_k^2 / cosh^2(w_k/T).
double gaussian_rate(const BathSpec& bath, int cutoff_count);
double gaussian_rate(const BathSpec& bath);

/// Upper bound on ln|F_1(t)| for a homogeneous frequency distribution on
/// [omega1, omega2] with equal couplings G and mode_count modes.
double interval_bound(double coupling, int mode_count, double omega1, double omega2, double t);

}  // namespace boundent
