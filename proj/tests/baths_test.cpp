#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boundent/baths.hpp"

namespace boundent {
namespace {

using std::numbers::pi;

BathSpec sampled(BathKind kind, double g, double temperature, double lo, double delta, int size, std::uint64_t seed) {
  auto freqs = sample_frequencies(lo, delta, size, seed);
  return kind == BathKind::bosonic ? BathSpec::bosonic(g, temperature, freqs) : BathSpec::spin(g, temperature, freqs);
}

std::vector<BathSpec> assorted_baths() {
  return {
      sampled(BathKind::bosonic, 2.0, 1.0, 50.0, 5.0, 200, 1),
      sampled(BathKind::bosonic, 0.1, 1.0, 0.0, 5.0, 200, 2),
      sampled(BathKind::bosonic, 1.0, 0.0, 10.0, 0.0, 3, 3),
      sampled(BathKind::spin, 0.5, 15.0, 50.0, 5.0, 300, 4),
      sampled(BathKind::spin, 1.0, 0.0, 0.0, 5.0, 50, 5),
      BathSpec::analytic(BathKind::analytic_gaussian, 2.0),
      BathSpec::analytic(BathKind::analytic_exponential, 0.7),
  };
}

TEST(SampleFrequencies, RangeAndReproducibility) {
  const auto a = sample_frequencies(50.0, 5.0, 200, 1);
  ASSERT_EQ(a.size(), 200u);
  for (double w : a) {
    EXPECT_GE(w, 50.0);
    EXPECT_LE(w, 55.0);
  }
  EXPECT_EQ(a, sample_frequencies(50.0, 5.0, 200, 1));
  EXPECT_NE(a, sample_frequencies(50.0, 5.0, 200, 2));
  // Regression value: pins the generator and the 53-bit mapping.
  EXPECT_EQ(a.front(), sample_frequencies(50.0, 5.0, 1, 1).front());
}

TEST(SampleFrequencies, ZeroWidthAndLowRegion) {
  EXPECT_EQ(sample_frequencies(50.0, 0.0, 10, 99), std::vector<double>(10, 50.0));
  for (double w : sample_frequencies(0.0, 5.0, 200, 7)) {
    EXPECT_GT(w, 0.0);
    EXPECT_LE(w, 5.0);
  }
}

TEST(SampleFrequencies, BadRange) {
  EXPECT_THROW(sample_frequencies(0.0, 0.0, 10, 1), BadRange);
  EXPECT_THROW(sample_frequencies(-1.0, 5.0, 10, 1), BadRange);
  EXPECT_THROW(sample_frequencies(50.0, -1.0, 10, 1), BadRange);
  EXPECT_THROW(sample_frequencies(50.0, 5.0, 0, 1), BadRange);
}

TEST(ThermalOccupation, Values) {
  EXPECT_EQ(thermal_occupation(1.0, 0.0), 0.0);
  EXPECT_NEAR(thermal_occupation(1.0, 1e-3), 0.0, 1e-300);
  EXPECT_NEAR(thermal_occupation(1.0, 1.0), 1.0 / (std::exp(1.0) - 1.0), 1e-15);
  EXPECT_NEAR(thermal_occupation(1.0, 1.0), 0.581977, 1e-6);
  EXPECT_NEAR(thermal_occupation(50.0, 1.0) / (1.0 / (std::exp(50.0) - 1.0)), 1.0, 1e-12);
  EXPECT_NEAR(thermal_occupation(50.0, 1.0), 1.9287e-22, 1e-25);
}

TEST(BathSpec, Validation) {
  EXPECT_THROW(BathSpec::bosonic(0.0, 1.0, {1.0}), BadRange);
  EXPECT_THROW(BathSpec::bosonic(1.0, -1.0, {1.0}), BadRange);
  EXPECT_THROW(BathSpec::spin(1.0, 1.0, {}), BadRange);
  EXPECT_THROW(BathSpec::spin(1.0, 1.0, {1.0, 0.0}), BadRange);
  EXPECT_THROW(BathSpec::analytic(BathKind::spin, 1.0), BadKind);
  EXPECT_THROW(BathSpec::analytic(BathKind::analytic_gaussian, 0.0), BadRate);
  EXPECT_EQ(parse_bath_kind("analytic_exponential"), BathKind::analytic_exponential);
  EXPECT_THROW(parse_bath_kind("ohmic"), BadKind);
}

TEST(BosonicFactor, ModulusMatchesDirectSum) {
  const BathSpec bath = sampled(BathKind::bosonic, 2.0, 1.0, 50.0, 5.0, 200, 1);
  for (double t : {0.0, 0.003, 0.05, 0.3}) {
    double log_mod = 0.0;
    for (double w : bath.frequencies()) {
      const double n = 1.0 / (std::exp(w / 1.0) - 1.0);
      log_mod += -8.0 * 4.0 / (w * w) * (2.0 * n + 1.0) * std::pow(std::sin(w * t / 2.0), 2);
    }
    EXPECT_NEAR(std::abs(bosonic_factor(bath, t, SzLabel(-2), SzLabel(0))), std::exp(log_mod), 1e-13);
  }
}

TEST(BosonicFactor, FourthPowerIdentityAndPhase) {
  const BathSpec bath = sampled(BathKind::bosonic, 1.3, 4.0, 20.0, 10.0, 50, 6);
  for (double t = 0.0; t < 1.0; t += 0.01) {
    const auto f1 = bosonic_factor(bath, t, SzLabel(-2), SzLabel(0));
    const auto f3 = bosonic_factor(bath, t, SzLabel(-2), SzLabel(2));
    EXPECT_NEAR(std::abs(f3), std::pow(std::abs(f1), 4), 1e-12);
    // F_{-2,2} has zero phase: M^2 = N^2.
    EXPECT_NEAR(std::arg(f3), 0.0, 1e-12);
  }
  double phase = 0.0;
  const double t = 0.37;
  for (double w : bath.frequencies()) phase += (1.3 * 1.3 / (w * w)) * (w * t - std::sin(w * t));
  const auto f = bosonic_factor(bath, t, SzLabel(-1), SzLabel(1));
  EXPECT_NEAR(std::arg(f), 0.0, 1e-12);
  const auto g = bosonic_factor(bath, t, SzLabel(2), SzLabel(1));  // M^2 - N^2 = 3
  EXPECT_NEAR(std::remainder(std::arg(g) - 3.0 * phase, 2.0 * pi), 0.0, 1e-10);
}

TEST(BosonicFactor, SingleModeFullRevival) {
  const double w = 52.0;
  const BathSpec bath = BathSpec::bosonic(2.0, 1.0, sample_frequencies(w, 0.0, 10, 1));
  for (int n = 1; n <= 3; ++n)
    EXPECT_NEAR(std::abs(bosonic_factor(bath, 2.0 * pi * n / w, SzLabel(-2), SzLabel(0))), 1.0, 1e-12);
  EXPECT_THROW(bosonic_factor(sampled(BathKind::spin, 1.0, 1.0, 1.0, 1.0, 3, 1), 0.1, SzLabel(0), SzLabel(1)),
               BadKind);
}

TEST(SpinFactor, MatchesProductFormulas) {
  const BathSpec bath = sampled(BathKind::spin, 0.5, 15.0, 50.0, 5.0, 300, 8);
  for (double t : {0.0, 0.01, 0.1, 0.43}) {
    double f1 = 1.0, f3 = 1.0;
    for (double w : bath.frequencies()) {
      const double c = std::cosh(w / 15.0);
      f1 *= std::sqrt(1.0 - std::pow(std::sin(0.5 * t * w), 2) / (c * c));
      f3 *= std::sqrt(1.0 - std::pow(std::sin(2.0 * 0.5 * t * w), 2) / (c * c));
    }
    EXPECT_NEAR(std::abs(spin_factor(bath, t, SzLabel(-2), SzLabel(0))), f1, 1e-12);
    EXPECT_NEAR(std::abs(spin_factor(bath, t, SzLabel(-2), SzLabel(2))), f3, 1e-12);
  }
}

TEST(SpinFactor, TemperatureLimits) {
  const BathSpec cold = sampled(BathKind::spin, 0.5, 0.0, 50.0, 5.0, 300, 9);
  for (double t : {0.1, 0.2, 0.5}) EXPECT_NEAR(std::abs(spin_factor(cold, t, SzLabel(-2), SzLabel(2))), 1.0, 1e-12);

  // beta -> 0: modulus per mode -> |cos(g t w (N-M)/2)|.
  const double g = 0.7, w = 3.0;
  const BathSpec hot = BathSpec::spin(g, 1e15, {w});
  for (double t : {0.05, 0.3, 1.1})
    for (int d = 1; d <= 4; ++d)
      EXPECT_NEAR(std::abs(spin_factor(hot, t, SzLabel(-2), SzLabel(-2 + d))), std::abs(std::cos(g * t * w * d / 2.0)),
                  1e-12);
}

TEST(FactorTable, InvariantsForEveryKind) {
  for (const BathSpec& bath : assorted_baths()) {
    for (double t = 0.0; t <= 1.0; t += 0.05) {
      const FactorTable f = factor_table(bath, t);
      for (int m : kSzValues)
        for (int n : kSzValues) {
          const auto fmn = f(SzLabel(m), SzLabel(n));
          if (m == n) EXPECT_EQ(fmn, std::complex<double>(1.0));
          EXPECT_LE(std::abs(fmn), 1.0 + 1e-12);
          EXPECT_EQ(fmn, std::conj(f(SzLabel(n), SzLabel(m))));
          // Depends only on |M - N|: compare with the pair anchored at -2.
          const auto anchor = f(SzLabel(-2), SzLabel(-2 + std::abs(m - n)));
          EXPECT_NEAR(std::abs(fmn), std::abs(anchor), 1e-12);
        }
      if (bath.kind() == BathKind::bosonic) {
        for (int m : kSzValues)
          for (int n : kSzValues)
            EXPECT_NEAR(std::abs(f(SzLabel(m), SzLabel(n))), std::pow(std::abs(f.f1()), (m - n) * (m - n) / 4.0),
                        1e-12);
        EXPECT_NEAR(std::abs(f.f1()), std::abs(bosonic_factor(bath, t, SzLabel(-2), SzLabel(0))), 1e-15);
      }
      if (bath.kind() == BathKind::spin)
        EXPECT_NEAR(std::abs(f.f3() - spin_factor(bath, t, SzLabel(-2), SzLabel(2))), 0.0, 1e-15);
    }
  }
}

TEST(FactorTable, FromEntriesValidates) {
  FactorTable::Matrix5cd m = FactorTable::Matrix5cd::Ones();
  m(0, 1) = 1.1;
  m(1, 0) = 1.1;
  EXPECT_THROW(FactorTable::from_entries(0.0, m), InvariantViolation);
  m = FactorTable::Matrix5cd::Ones();
  m(0, 1) = std::complex<double>(0.0, 0.5);
  EXPECT_THROW(FactorTable::from_entries(0.0, m), InvariantViolation);
  m(1, 0) = std::complex<double>(0.0, -0.5);
  EXPECT_NO_THROW(FactorTable::from_entries(0.0, m));
  m(2, 2) = 0.9;
  EXPECT_THROW(FactorTable::from_entries(0.0, m), InvariantViolation);
}

TEST(GaussianRate, Values) {
  const BathSpec zero_t = BathSpec::bosonic(1.5, 0.0, sample_frequencies(1.0, 4.0, 40, 3));
  EXPECT_NEAR(gaussian_rate(zero_t, 7), 2.0 * 1.5 * 1.5 * 7, 1e-12);
  EXPECT_EQ(gaussian_rate(sampled(BathKind::spin, 1.0, 0.0, 0.0, 5.0, 30, 1)), 0.0);
  EXPECT_NEAR(gaussian_rate(BathSpec::bosonic(2.0, 1.0, {1.0}), 1), 8.0 * (2.0 / (std::exp(1.0) - 1.0) + 1.0), 1e-12);
  EXPECT_NEAR(gaussian_rate(BathSpec::bosonic(2.0, 1.0, {1.0}), 1), 17.3116, 1e-4);
}

TEST(GaussianRate, CutoffUsesLowestFrequencies) {
  const BathSpec bath = BathSpec::spin(0.8, 2.0, {5.0, 1.0, 3.0, 0.5});
  const auto term = [](double w) { return w * w / std::pow(std::cosh(w / 2.0), 2); };
  EXPECT_NEAR(gaussian_rate(bath, 2), 0.5 * 0.64 * (term(0.5) + term(1.0)), 1e-14);
  EXPECT_THROW(gaussian_rate(bath, 0), BadCutoff);
  EXPECT_THROW(gaussian_rate(bath, 5), BadCutoff);
  EXPECT_THROW(gaussian_rate(BathSpec::analytic(BathKind::analytic_gaussian, 1.0), 1), BadKind);
}

TEST(GaussianRate, EarlyTimeLaw) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const BathSpec& bath : {sampled(BathKind::bosonic, 0.1 * seed, 1.0, 0.0, 5.0, 200, seed),
                                 sampled(BathKind::spin, 0.2 * seed, 1.0, 0.0, 5.0, 200, seed)}) {
      const double gamma = gaussian_rate(bath);
      for (int k = 1; k <= 20; ++k) {
        const double t = 0.1 / std::sqrt(gamma) * k / 20.0;
        const double log_f1 = std::log(std::abs(factor_table(bath, t).f1()));
        EXPECT_LE(std::abs(log_f1 / (-gamma * t * t) - 1.0), 0.05);
      }
    }
  }
}

TEST(FactorModulus, NonIncreasingInTemperature) {
  const auto freqs = sample_frequencies(50.0, 5.0, 200, 12);
  for (BathKind kind : {BathKind::bosonic, BathKind::spin}) {
    for (double t : {0.003, 0.02, 0.2}) {
      double previous = 2.0;
      for (double temperature = 0.0; temperature <= 100.0; temperature += 5.0) {
        const BathSpec bath = kind == BathKind::bosonic ? BathSpec::bosonic(1.0, temperature, freqs)
                                                        : BathSpec::spin(1.0, temperature, freqs);
        const double f1 = std::abs(factor_table(bath, t).f1());
        EXPECT_LE(f1, previous + 1e-12);
        previous = f1;
      }
    }
  }
}

TEST(AnalyticFactor, Values) {
  const double gamma = 1.7, t = 0.4;
  EXPECT_NEAR(analytic_factor(BathKind::analytic_gaussian, gamma, t, SzLabel(-2), SzLabel(0)),
              std::exp(-gamma * t * t), 1e-15);
  EXPECT_NEAR(analytic_factor(BathKind::analytic_gaussian, gamma, t, SzLabel(-2), SzLabel(2)),
              std::exp(-4.0 * gamma * t * t), 1e-15);
  EXPECT_NEAR(analytic_factor(BathKind::analytic_exponential, gamma, t, SzLabel(-2), SzLabel(0)),
              std::exp(-gamma * t), 1e-15);
  EXPECT_NEAR(analytic_factor(BathKind::analytic_exponential, gamma, t, SzLabel(2), SzLabel(-2)),
              std::exp(-4.0 * gamma * t), 1e-15);
  for (int m : kSzValues)
    for (int n : kSzValues) {
      EXPECT_EQ(analytic_factor(BathKind::analytic_gaussian, gamma, 0.0, SzLabel(m), SzLabel(n)), 1.0);
      EXPECT_EQ(analytic_factor(BathKind::analytic_exponential, gamma, 0.0, SzLabel(m), SzLabel(n)), 1.0);
    }
  EXPECT_THROW(analytic_factor(BathKind::bosonic, gamma, t, SzLabel(0), SzLabel(1)), BadKind);
}

TEST(IntervalBound, Limits) {
  EXPECT_EQ(interval_bound(1.0, 100, 10.0, 20.0, 0.0), 0.0);
  EXPECT_NEAR(interval_bound(1.0, 100, 10.0, 20.0, 1e-9), 0.0, 1e-12);
  EXPECT_NEAR(interval_bound(1.5, 100, 10.0, 20.0, 1e7), -2.0 * 2.25 * 100 / 400.0, 1e-6);
  // Continuous across the series switch-over.
  const double w1 = 10.0, w2 = 10.2;  // (w2 - w1) t / 2 = 1e-3 at t = 0.01
  EXPECT_NEAR(interval_bound(1.0, 10, w1, w2, 0.01 * (1 - 1e-9)), interval_bound(1.0, 10, w1, w2, 0.01 * (1 + 1e-9)),
              1e-10);
  EXPECT_THROW(interval_bound(1.0, 10, 20.0, 10.0, 1.0), BadRange);
  EXPECT_THROW(interval_bound(1.0, 10, 0.0, 10.0, 1.0), BadRange);
}

TEST(IntervalBound, BoundsHomogeneousBaths) {
  const double coupling = 0.7, w1 = 5.0, w2 = 15.0;
  const int modes = 100;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BathSpec bath = BathSpec::bosonic(coupling, 0.0, sample_frequencies(w1, w2 - w1, modes, seed));
    for (double t = 0.0; t <= 5.0; t += 0.01) {
      const double log_f1 = std::log(std::abs(factor_table(bath, t).f1()));
      EXPECT_LE(log_f1, interval_bound(coupling, modes, w1, w2, t) + 1e-12) << "seed " << seed << " t " << t;
    }
  }
}

}  // namespace
}  // namespace boundent
