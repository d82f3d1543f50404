#include "boundent/states.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>
#include <string>

namespace boundent {

SzLabel::SzLabel(int value) : value_(value) {
  if (value < -2 || value > 2) throw OutOfRange("SzLabel: " + std::to_string(value) + " not in [-2, 2]");
}

DensityMatrix DensityMatrix::validated(const Matrix9cd& m, double psd_tolerance) {
  if (!m.allFinite()) throw InvariantViolation("density matrix has non-finite entries");
  const double defect = hermitian_defect(m);
  if (defect > kHermitianTolerance)
    throw InvariantViolation("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-10)
    throw InvariantViolation("density matrix trace is " + std::to_string(trace));
  const double min_eig = hermitian_eigenvalues(m).front();
  if (min_eig < -psd_tolerance)
    throw InvariantViolation("density matrix is not PSD (min eigenvalue " + std::to_string(min_eig) + ")");
  return DensityMatrix(m);
}

namespace {

Vector9cd product(const Eigen::Vector3cd& first, const Eigen::Vector3cd& second) {
  Vector9cd out;
  for (int m1 = 0; m1 < kQutritDim; ++m1)
    for (int m2 = 0; m2 < kQutritDim; ++m2) out(basis_index(m1, m2)) = first(m1) * second(m2);
  return out;
}

Eigen::Vector3cd ket(double c0, double c1, double c2) { return Eigen::Vector3cd(c0, c1, c2); }

Matrix9cd diagonal_mixture(std::initializer_list<std::pair<int, int>> kets) {
  Matrix9cd m = Matrix9cd::Zero();
  for (auto [m1, m2] : kets) m(basis_index(m1, m2), basis_index(m1, m2)) = 1.0 / 3.0;
  return m;
}

}  // namespace

Vector9cd psi_plus() {
  Vector9cd v = Vector9cd::Zero();
  for (int m = 0; m < kQutritDim; ++m) v(basis_index(m, m)) = 1.0 / std::sqrt(3.0);
  return v;
}

DensityMatrix sigma_plus() { return DensityMatrix::validated(diagonal_mixture({{0, 1}, {1, 2}, {2, 0}})); }

DensityMatrix sigma_minus() { return DensityMatrix::validated(diagonal_mixture({{1, 0}, {2, 1}, {0, 2}})); }

DensityMatrix maximally_mixed() { return DensityMatrix::validated(Matrix9cd::Identity() / 9.0); }

DensityMatrix pure_state(const Vector9cd& psi) {
  const Vector9cd n = psi.normalized();
  return DensityMatrix::validated(n * n.adjoint());
}

DensityMatrix horodecki_state(double a) {
  if (!(a >= 2.0 && a <= 5.0)) throw OutOfRange("horodecki_state: a = " + std::to_string(a) + " not in [2, 5]");
  const Vector9cd psi = psi_plus();
  const Matrix9cd m = (2.0 / 7.0) * (psi * psi.adjoint()) + (a / 7.0) * sigma_plus().matrix() +
                      ((5.0 - a) / 7.0) * sigma_minus().matrix();
  return DensityMatrix::validated(m);
}

std::array<Vector9cd, 5> upb_vectors() {
  const double s = 1.0 / std::sqrt(2.0);
  return {
      product(ket(1, 0, 0), ket(s, -s, 0)),
      product(ket(s, -s, 0), ket(0, 0, 1)),
      product(ket(0, 0, 1), ket(0, s, -s)),
      // (|1> - |2>)|0> / sqrt(2)
      product(ket(0, s, -s), ket(1, 0, 0)),
      product(ket(1, 1, 1) / std::sqrt(3.0), ket(1, 1, 1) / std::sqrt(3.0)),
  };
}

DensityMatrix upb_state() {
  Matrix9cd projector = Matrix9cd::Zero();
  for (const auto& phi : upb_vectors()) projector += phi * phi.adjoint();
  return DensityMatrix::validated((Matrix9cd::Identity() - projector) / 4.0);
}

}  // namespace boundent
