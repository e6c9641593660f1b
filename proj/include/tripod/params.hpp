// params.hpp — dimensionless physics parameters, all rates in units of gamma
#pragma once

#include <string>

#include "tripod/errors.hpp"

namespace tripod {

// Parameters of the driven atom. Everything is expressed in units of the
// spontaneous emission rate gamma, so gamma itself never appears in the code.
//
//   g_p      probe Rabi frequency
//   g_c      coupling Rabi frequency
//   delta_c  probe-coupling frequency difference (omega_p - omega_c)
//   Delta    Zeeman splitting between adjacent ground sublevels
//   alpha    non-radiative/radiative damping ratio
//   beta     radiative damping rate per decay branch
//
// Defaults are the stock absorption/dispersion demo set.
struct Params {
  double g_p = 0.01;
  double g_c = 5.0;
  double delta_c = 0.0;
  double Delta = 5.0;
  double alpha = 0.001;
  double beta = 0.666;

  bool operator==(const Params&) const = default;
};

// The same six fields, read against the four-level tripod scheme or the
// three-level Lambda scheme respectively.
using TripodParams = Params;
using LambdaParams = Params;

// Returns p unchanged if every invariant holds (g_p, g_c, alpha >= 0,
// beta > 0, all fields finite); otherwise throws a ValidationError whose
// message names each violated field.
Params validateParams(const Params& p);

// JSON object with exactly the field names g_p, g_c, delta_c, Delta, alpha,
// beta. paramsFromJson rejects missing/extra keys and non-finite numbers.
std::string paramsToJson(const Params& p);
Params paramsFromJson(const std::string& text);

}  // namespace tripod
