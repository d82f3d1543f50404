#pragma once

// Entanglement criteria for bipartite d x d states: partial transpose with
// negativity (free entanglement), realignment with the witness quantity
// max(0, ||rho^R||_1 - 1) (detects PPT entangled states as well).

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "boundent/linalg.hpp"
#include "boundent/states.hpp"

namespace boundent {

/// Tolerance below which negativity and realignment count as zero.
inline constexpr double kWitnessZeroTolerance = 1e-10;

namespace detail {

inline int local_dim(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw NonSquare("bipartite operation needs a square matrix");
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows))));
  if (d * d != rows) throw NonSquare("matrix dimension " + std::to_string(rows) + " is not a perfect square");
  return d;
}

}  // namespace detail

/// Transpose on one factor of a d x d bipartite operator (subsystem 1 or 2).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> partial_transpose(
    const Eigen::MatrixBase<Derived>& m, int subsystem) {
  if (subsystem != 1 && subsystem != 2)
    throw BadSubsystem("partial_transpose: subsystem must be 1 or 2, got " + std::to_string(subsystem));
  const int d = detail::local_dim(m.rows(), m.cols());
  Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> out(m.rows(),
                                                                                                     m.cols());
  for (int m1 = 0; m1 < d; ++m1)
    for (int m2 = 0; m2 < d; ++m2)
      for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
          const int row = d * m1 + m2;
          const int col = d * n1 + n2;
          out(row, col) = subsystem == 1 ? m(d * n1 + m2, d * m1 + n2) : m(d * m1 + n2, d * n1 + m2);
        }
  return out;
}

/// Realignment (reshuffle): out((i,j),(k,l)) = m((i,k),(j,l)).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> realign(
    const Eigen::MatrixBase<Derived>& m) {
  const int d = detail::local_dim(m.rows(), m.cols());
  Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> out(m.rows(),
                                                                                                     m.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(d * i + j, d * k + l) = m(d * i + k, d * j + l);
  return out;
}

inline Matrix9cd partial_transpose(const DensityMatrix& rho, int subsystem) {
  return partial_transpose(rho.matrix(), subsystem);
}

inline Matrix9cd realign(const DensityMatrix& rho) { return realign(rho.matrix()); }

/// (||rho^{T_subsystem}||_1 - 1) / 2. Noise in [-1e-10, 0) is clamped to 0;
/// anything more negative throws InvariantViolation.
double negativity(const DensityMatrix& rho, int subsystem = 1);

/// max(0, ||rho^R||_1 - 1).
double realignment_witness(const DensityMatrix& rho);

enum class EntanglementClass { separable_compatible, bound_entangled, free_entangled };

const char* to_string(EntanglementClass c);

struct WitnessPair {
  double negativity = 0.0;
  double realignment = 0.0;

  bool free_entangled() const { return negativity > kWitnessZeroTolerance; }
  bool bound_entangled() const { return realignment > kWitnessZeroTolerance && !free_entangled(); }
  EntanglementClass classify() const;
};

WitnessPair witnesses(const DensityMatrix& rho);

}  // namespace boundent
