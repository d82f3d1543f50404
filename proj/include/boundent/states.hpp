#pragma once

// Two-qutrit states in the product basis |m1 m2>, m1, m2 in {0, 1, 2}.
// Basis index = 3 * m1 + m2 (first qutrit major). Every module uses this
// ordering through basis_index().

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "boundent/linalg.hpp"

namespace boundent {

inline constexpr int kQutritDim = 3;
inline constexpr int kPairDim = kQutritDim * kQutritDim;

using Matrix9cd = Eigen::Matrix<std::complex<double>, kPairDim, kPairDim>;
using Vector9cd = Eigen::Matrix<std::complex<double>, kPairDim, 1>;

constexpr int basis_index(int m1, int m2) { return kQutritDim * m1 + m2; }

/// Eigenvalue of S_z = S_1z + S_2z, in {-2, ..., 2}.
class SzLabel {
 public:
  constexpr SzLabel() = default;
  /// Throws OutOfRange for values outside {-2, ..., 2}.
  explicit SzLabel(int value);

  static constexpr SzLabel of(int m1, int m2) { return SzLabel(m1 + m2 - 2, Unchecked{}); }
  static constexpr SzLabel of_index(int index) { return of(index / kQutritDim, index % kQutritDim); }

  constexpr int value() const { return value_; }
  /// 0-based slot, value + 2.
  constexpr int slot() const { return value_ + 2; }

  friend constexpr bool operator==(SzLabel, SzLabel) = default;

 private:
  struct Unchecked {};
  constexpr SzLabel(int value, Unchecked) : value_(value) {}
  int value_ = 0;
};

inline constexpr std::array<int, 5> kSzValues = {-2, -1, 0, 1, 2};

/// Hermitian, unit-trace, positive semidefinite 9x9 matrix. Construction
/// validates all three properties.
class DensityMatrix {
 public:
  /// Tolerance on the smallest eigenvalue (>= -tolerance) used by validated().
  static constexpr double kDefaultPsdTolerance = 1e-10;

  /// Throws InvariantViolation (or a linalg error) when m is not a state.
  static DensityMatrix validated(const Matrix9cd& m, double psd_tolerance = kDefaultPsdTolerance);

  const Matrix9cd& matrix() const { return m_; }
  std::complex<double> operator()(int row, int col) const { return m_(row, col); }

 private:
  explicit DensityMatrix(const Matrix9cd& m) : m_(m) {}
  Matrix9cd m_;
};

/// |Psi+> = (|00> + |11> + |22>) / sqrt(3).
Vector9cd psi_plus();
/// (|01><01| + |12><12| + |20><20|) / 3.
DensityMatrix sigma_plus();
/// (|10><10| + |21><21| + |02><02|) / 3.
DensityMatrix sigma_minus();
DensityMatrix maximally_mixed();
DensityMatrix pure_state(const Vector9cd& psi);

/// (2/7) P+ + (a/7) sigma+ + ((5-a)/7) sigma-, for 2 <= a <= 5.
/// Separable for a <= 3, bound entangled for 3 < a <= 4, free entangled above.
DensityMatrix horodecki_state(double a);

/// The five product vectors of the unextendible product basis, normalized.
std::array<Vector9cd, 5> upb_vectors();

/// (I - sum_j |phi_j><phi_j|) / 4 built from upb_vectors().
DensityMatrix upb_state();

}  // namespace boundent
