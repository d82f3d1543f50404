#pragma once

// Small dense complex linear algebra on top of Eigen. Everything here is a
// pure function of its argument; matrices are taken by const reference to
// any Eigen expression and never modified.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "boundent/errors.hpp"

namespace boundent {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexMatrixXd = ComplexMatrix<double>;

/// Absolute entrywise tolerance on max |m - m^H| for Hermitian inputs.
inline constexpr double kHermitianTolerance = 1e-10;

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m) {
  if (!m.allFinite()) throw NonFinite("matrix has non-finite entries");
}

}  // namespace detail

template <typename Derived>
auto hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Real eigenvalues of a Hermitian matrix, ascending.
template <typename Derived>
std::vector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw NonSquare("hermitian_eigenvalues: matrix is not square");
  detail::require_finite(m);
  if (m.size() > 0 && hermitian_defect(m) > Real(kHermitianTolerance))
    throw NotHermitian("hermitian_eigenvalues: |m - m^H| exceeds 1e-10");

  // Symmetrize so the solver sees an exactly Hermitian input.
  const Plain h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Plain> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence("hermitian_eigenvalues: solver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<Real> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

/// Singular values, descending.
template <typename Derived>
std::vector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> singular_values(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  detail::require_finite(m);
  const Plain p = m;
  // Two-sided Jacobi: high relative accuracy, and the matrices here are tiny.
  Eigen::JacobiSVD<Plain> svd(p);
  if (svd.info() != Eigen::Success) throw NoConvergence("singular_values: SVD did not converge");
  const auto& sv = svd.singularValues();
  std::vector<Real> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), [](Real x, Real y) { return x > y; });
  return out;
}

/// Sum of singular values.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real trace_norm(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  Real sum(0);
  for (Real s : singular_values(m)) sum += s;
  return sum;
}

}  // namespace boundent
