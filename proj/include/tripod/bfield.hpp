// bfield.hpp — magnetic field required for a given Zeeman splitting
#pragma once

#include "tripod/errors.hpp"

namespace tripod {

// Bohr magneton over Planck constant, MHz per gauss.
inline constexpr double kBohrMagnetonMHzPerGauss = 1.3996246;

struct BFieldQuery {
  double splitting_MHz = 0.0;  // >= 0
  double lande_g = 1.0;        // > 0
};

// B = splitting / (g * mu_B/h) in gauss, from Delta = g * mu_B * B / hbar.
double bfieldForSplitting(const BFieldQuery& q);

}  // namespace tripod
