#include "boundent/witnesses.hpp"

#include <algorithm>

namespace boundent {

double negativity(const DensityMatrix& rho, int subsystem) {
  const double value = (trace_norm(partial_transpose(rho, subsystem)) - 1.0) / 2.0;
  if (value < -kWitnessZeroTolerance)
    throw InvariantViolation("negativity: trace norm below 1 (" + std::to_string(value) + ")");
  return std::max(value, 0.0);
}

double realignment_witness(const DensityMatrix& rho) { return std::max(0.0, trace_norm(realign(rho)) - 1.0); }

EntanglementClass WitnessPair::classify() const {
  if (free_entangled()) return EntanglementClass::free_entangled;
  if (bound_entangled()) return EntanglementClass::bound_entangled;
  return EntanglementClass::separable_compatible;
}

const char* to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::separable_compatible:
      return "separable-compatible";
    case EntanglementClass::bound_entangled:
      return "bound";
    case EntanglementClass::free_entangled:
      return "free";
  }
  return "unknown";
}

WitnessPair witnesses(const DensityMatrix& rho) { return {negativity(rho), realignment_witness(rho)}; }

}  // namespace boundent
