// hamiltonian.hpp — rotating-frame Hamiltonians, eigensystems, dark states,
// and the closed-form cubic/eigenvector expressions for the tripod scheme.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "tripod/params.hpp"
#include "tripod/types.hpp"

namespace tripod {

// 4x4 rotating-frame tripod Hamiltonian, basis order |1>,|2>,|3>,|4> with
// |1> the excited state. Diagonal (0, delta_c-Delta, 0, delta_c+Delta);
// couplings enter as -g/2 on H(0,1), H(0,2)=-g_c/2, H(0,3). Exactly Hermitian
// by construction (real symmetric entries).
ComplexMatrix buildTripodH(const TripodParams& p);

// 3x3 Lambda Hamiltonian, basis order excited |e>, probe ground |g1>,
// coupling ground |g3>. Diagonal (0, delta_c-Delta, 0); couplings -g/2.
ComplexMatrix buildLambdaH(const LambdaParams& p);

// Eigenvalues sorted by real part ascending (ties by imaginary part) with
// matching unit-norm eigenvectors whose first nonzero component is made
// real-positive. Vectors are orthonormal for Hermitian input.
struct EigenSystem {
  ComplexVector values;
  ComplexMatrix vectors;  // column k pairs with values(k)
};

EigenSystem eigensystem(const ComplexMatrix& H, bool hermitian = true);

// Eigenpair with (near-)zero excited-state amplitude. couplingAmplitude is
// the |<3|v>| weight, so states that also avoid the coupling ground
// (the "ideal" dark states) are distinguishable.
struct DarkState {
  Complex eigenvalue;
  ComplexVector vector;
  double excitedAmplitude;   // |<1|v>|
  double couplingAmplitude;  // |<3|v>|
};

// All eigenpairs of es with excited amplitude |v(0)| <= tol. Assumes the
// basis conventions of buildTripodH/buildLambdaH (excited state first,
// coupling ground at index 2).
std::vector<DarkState> findDarkStates(const EigenSystem& es, double tol = 1e-8);

// Roots of  4*L^3 - 8*delta_c*L^2 - (g_c^2 + 2*g_p^2)*L + 4*delta_c*g_p^2 = 0,
// sorted by real part (ties by imaginary part). These are the closed-form
// bright eigenvalues in the symmetric-drive frame; see closedFormEigenvector.
std::array<Complex, 3> closedFormCubicRoots(const TripodParams& p);

struct ClosedFormVector {
  Eigen::Vector4cd vector;        // unnormalized (-2L/g_p, 1, -2(g_p^2-2L^2)/(g_c g_p), 1)
  double residualRotatingFrame;   // ||H v - L v|| against buildTripodH(p)
  double residualSymmetricFrame;  // same residual against the symmetric-drive frame
};

// Closed-form eigenvector for a root L of the cubic above. The expression is
// an exact eigenvector of the symmetric-drive frame Hamiltonian
// diag(0, 0, 2*delta_c, 0) with -g/2 couplings (probe arms resonant), where
// -|2>+|4> is a zero-eigenvalue dark state for all parameters; against the
// rotating frame of buildTripodH it is generally not an eigenvector, so both
// residuals are reported as diagnostics rather than asserted.
// Requires g_p > 0 and g_c > 0.
ClosedFormVector closedFormEigenvector(double lambda, const TripodParams& p);

// Symmetric-drive frame Hamiltonian used by the closed-form expressions.
ComplexMatrix buildSymmetricFrameH(const TripodParams& p);

// Plain-text layout for debugging: one row per line, entries printed as
// "re+imj" with %+.6g fields, columns separated by two spaces.
std::string formatMatrix(const ComplexMatrix& m);

}  // namespace tripod
