// liouville.hpp — Lindblad dissipator assembly, Liouvillian superoperator,
// steady-state solve, time evolution, and the numeric probe responses.
#pragma once

#include <vector>

#include "tripod/params.hpp"
#include "tripod/types.hpp"

namespace tripod {

enum class SystemKind { Tripod, Lambda };

// Ground-state relaxation model. Exchange moves population between ground
// pairs (rate alpha per ordered pair); Dephasing leaves populations alone and
// damps ground coherences via single-state dephasing channels at rate alpha.
enum class GroundRelaxation { Exchange, Dephasing };

std::string groundRelaxationTag(GroundRelaxation model);
GroundRelaxation groundRelaxationFromTag(const std::string& tag);

// One collapse channel sqrt(rate)*|to><from|; from == to is pure dephasing.
struct CollapseChannel {
  int from;
  int to;
  double rate;  // in units of gamma
};

// Radiative channels excited -> each ground at rate beta, plus the ground
// relaxation channels of the chosen model at rate alpha (omitted when
// alpha = 0).
std::vector<CollapseChannel> collapseChannels(const Params& p, GroundRelaxation model,
                                              SystemKind system);

// Drive Hamiltonian for the master-equation evaluators. The couplings enter
// as -g (twice the -g/2 element of buildTripodH): under this normalization
// the steady-state absorption peaks sit at delta_c -+ Delta = +-g_c with unit
// height, which is the convention of the closed-form responses in
// analytic.hpp. Detunings are the same diag(0, delta_c-Delta, 0,
// delta_c+Delta) rotating frame.
ComplexMatrix driveHamiltonian(const Params& p, SystemKind system);

// N^2 x N^2 superoperator acting on column-stacked vec(rho):
//   L[rho] = -i[H, rho] + sum_k (C_k rho C_k^+ - {C_k^+ C_k, rho}/2).
// H must be Hermitian and channel labels within the dimension.
ComplexMatrix buildLiouvillian(const ComplexMatrix& H,
                               const std::vector<CollapseChannel>& channels);

// Unique trace-one steady state of L, found as the null vector of a
// rank-revealing SVD. Degeneracy is detected by counting singular values
// below 1e-8 times the largest; anything but exactly one throws
// NumericalError("no unique steady state...").
ComplexMatrix steadyState(const ComplexMatrix& L);

// Classical fixed-step 4th-order integration of d(rho)/dt = L[rho] up to
// time t. Serves as the independent oracle for steadyState. Throws
// NumericalError if the trajectory loses trace or diverges.
ComplexMatrix evolve(const ComplexMatrix& H, const std::vector<CollapseChannel>& channels,
                     const ComplexMatrix& rho0, double t, double dt);

// Step resolving the fastest frequency: 0.01 / max(1, g_c, |delta_c|+Delta, beta).
double defaultTimeStep(const Params& p);

// Steady-state probe response h = (<1|rho|2> + <1|rho|4>) / g_p.
// Coherence orientation: the excited-row entries are the orientation whose
// imaginary part is nonnegative and agrees with the closed forms under the
// driveHamiltonian sign convention; the conjugate orientation flips Im(h).
// Requires g_p > 0 and a unique steady state.
Complex probeResponse(const TripodParams& p,
                      GroundRelaxation model = GroundRelaxation::Exchange);

// Lambda analogue, h = <e|rho|g1> / g_p.
Complex lambdaProbeResponse(const LambdaParams& p,
                            GroundRelaxation model = GroundRelaxation::Exchange);

// Column-stacking helpers shared with the tests.
ComplexVector vecDensity(const ComplexMatrix& m);
ComplexMatrix unvecDensity(const ComplexVector& v);

}  // namespace tripod
