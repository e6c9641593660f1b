#include "tripod/bfield.hpp"

#include <cmath>

namespace tripod {

double bfieldForSplitting(const BFieldQuery& q) {
  if (!std::isfinite(q.splitting_MHz) || q.splitting_MHz < 0.0)
    throw ValidationError("splitting_MHz must be finite and nonnegative");
  if (!std::isfinite(q.lande_g) || q.lande_g <= 0.0)
    throw ValidationError("lande_g must be finite and positive");
  return q.splitting_MHz / (q.lande_g * kBohrMagnetonMHzPerGauss);
}

}  // namespace tripod
