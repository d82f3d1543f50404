#include "boundent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boundent {

namespace {

void check_closed_args(double a, double f1, double f2, double f3) {
  if (!(a >= 2.0 && a <= 5.0)) throw OutOfRange("closed form: a = " + std::to_string(a) + " not in [2, 5]");
  for (double f : {f1, f2, f3})
    if (!(f >= 0.0 && f <= 1.0 + 1e-12)) throw OutOfRange("closed form: |F| = " + std::to_string(f) + " not in [0, 1]");
}

double threshold_polynomial(double x) { return 2.0 * (2.0 * x + x * x * x * x) + std::sqrt(7.0) - 7.0; }

}  // namespace

DensityMatrix dephase(const DensityMatrix& rho0, const FactorTable& factors) {
  Matrix9cd out = rho0.matrix();
  for (int row = 0; row < kPairDim; ++row) {
    const SzLabel m = SzLabel::of_index(row);
    for (int col = 0; col < kPairDim; ++col) {
      const SzLabel n = SzLabel::of_index(col);
      if (m != n) out(row, col) *= factors(m, n);
    }
  }
  return DensityMatrix::validated(out, kDephasedPsdTolerance);
}

EvolvedState evolve(const DensityMatrix& rho0, const BathSpec& bath, double t) {
  FactorTable factors = factor_table(bath, t);
  DensityMatrix rho = dephase(rho0, factors);
  return {t, std::move(rho), std::move(factors)};
}

double horodecki_R_closed(double a, double f1, double f2, double f3) {
  check_closed_args(a, f1, f2, f3);
  return (2.0 / 21.0) * std::max(0.0, std::sqrt(3.0 * a * a - 15.0 * a + 19.0) + 2.0 * (f1 + f2 + f3) - 7.0);
}

double horodecki_N_closed(double a, double f1, double f2, double f3) {
  check_closed_args(a, f1, f2, f3);
  const double b = 2.0 * a - 5.0;
  double sum = 0.0;
  for (double f : {f1, f2, f3}) sum += std::max(0.0, std::sqrt(b * b + 16.0 * f * f) - 5.0);
  return sum / 42.0;
}

double f1_threshold() {
  // The polynomial is increasing on [0, 1], negative at 0 and positive at 1.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (threshold_polynomial(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double death_time_gaussian(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw BadRate("death_time_gaussian: gamma must be finite and > 0");
  static const double log_threshold = -std::log(f1_threshold());
  return std::sqrt(log_threshold / gamma);
}

}  // namespace boundent
