// analytic.hpp — closed-form weak-probe susceptibilities of the tripod and
// Lambda schemes. Re(h) is dispersion, Im(h) absorption; h is dimensionless.
#pragma once

#include "tripod/params.hpp"
#include "tripod/types.hpp"

namespace tripod {

// Full tripod response with its two single-window components.
struct ComplexResponse {
  Complex value;
  Complex left;   // h_l, the delta_c - Delta window
  Complex right;  // h_r, the delta_c + Delta window
};

// Single-window kernel  h0(x) = x / (g_c^2 - x*(i + x)).
// Total function: the removable corner g_c = 0, x = 0 returns 0.
// Requires g_c >= 0.
Complex h0(double x, double g_c);

// Im(h0) in closed form: x^2 / ((g_c^2 - x^2)^2 + x^2). Zero minimum at
// x = 0, unit peaks at x = +-g_c. Requires g_c > 0.
double imH0(double x, double g_c);

// Two-window decomposition  (h0(delta_c - Delta) + h0(delta_c + Delta)) / 2.
Complex hTwoLambda(double delta_c, double Delta, double g_c);

// Full tripod response including the ground-state relaxation ratio alpha:
//   h = i*beta / (9*alpha*beta + 4*(2*alpha + beta)*g_c^2) * (h_l + h_r).
// Reduces to hTwoLambda as alpha -> 0. Requires g_c > 0 or alpha > 0.
ComplexResponse hFull(const TripodParams& p);

// Exact Lambda steady-state response -A/B (polynomial forms, alpha = 0),
// valid at any probe strength. Throws NumericalError at the singular point
// B = 0 (only reachable when g_p = g_c = 0).
Complex lambdaExact(const LambdaParams& p);

// Weak-probe Lambda response; identical to h0(delta_c - Delta, g_c).
Complex lambdaWeakProbe(double delta_c, double Delta, double g_c);

}  // namespace tripod
