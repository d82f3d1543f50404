#pragma once

// Collective pure dephasing of two qutrits and the closed-form entanglement
// quantities of the Horodecki family under it.

#include "boundent/baths.hpp"
#include "boundent/states.hpp"

namespace boundent {

/// Minimum-eigenvalue tolerance for states produced by dephase().
inline constexpr double kDephasedPsdTolerance = 1e-9;

/// Multiplies each coherence ((m1,m2),(n1,n2)) by F_{M,N}, M = m1+m2-2,
/// N = n1+n2-2. Populations and same-sector coherences are untouched.
/// Throws InvariantViolation when the result is not a state.
DensityMatrix dephase(const DensityMatrix& rho0, const FactorTable& factors);

struct EvolvedState {
  double time;
  DensityMatrix rho;
  FactorTable factors;
};

EvolvedState evolve(const DensityMatrix& rho0, const BathSpec& bath, double t);

/// Witness quantity of the dephased Horodecki state from the factor moduli:
/// (2/21) max{0, sqrt(3a^2 - 15a + 19) + 2(f1 + f2 + f3) - 7}.
double horodecki_R_closed(double a, double f1, double f2, double f3);

/// Negativity of the dephased Horodecki state:
/// (1/42) sum_k max{0, sqrt((2a-5)^2 + 16 f_k^2) - 5}.
double horodecki_N_closed(double a, double f1, double f2, double f3);

/// Root in (0, 1) of 2(2x + x^4) + sqrt(7) - 7: the |F_1| below which the
/// a = 4 state (with |F_2| = |F_1|, |F_3| = |F_1|^4) loses its witness.
double f1_threshold();

/// sqrt(-ln(f1_threshold()) / gamma): time at which the witness of the
/// a = 4 state vanishes under |F_1| = exp(-gamma t^2).
double death_time_gaussian(double gamma);

}  // namespace boundent
