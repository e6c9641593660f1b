#include "tripod/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace tripod {

namespace {

// Threshold below which a unit-vector component counts as zero when fixing
// the overall phase.
constexpr double kPhaseTol = 1e-9;

void fixPhases(ComplexMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const Complex v = vectors(r, c);
      if (std::abs(v) > kPhaseTol) {
        vectors.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
}

}  // namespace

ComplexMatrix buildTripodH(const TripodParams& p) {
  validateParams(p);
  ComplexMatrix H = ComplexMatrix::Zero(4, 4);
  H(1, 1) = p.delta_c - p.Delta;
  H(3, 3) = p.delta_c + p.Delta;
  H(0, 1) = H(1, 0) = -0.5 * p.g_p;
  H(0, 2) = H(2, 0) = -0.5 * p.g_c;
  H(0, 3) = H(3, 0) = -0.5 * p.g_p;
  return H;
}

ComplexMatrix buildLambdaH(const LambdaParams& p) {
  validateParams(p);
  ComplexMatrix H = ComplexMatrix::Zero(3, 3);
  H(1, 1) = p.delta_c - p.Delta;
  H(0, 1) = H(1, 0) = -0.5 * p.g_p;
  H(0, 2) = H(2, 0) = -0.5 * p.g_c;
  return H;
}

ComplexMatrix buildSymmetricFrameH(const TripodParams& p) {
  validateParams(p);
  ComplexMatrix H = ComplexMatrix::Zero(4, 4);
  H(2, 2) = 2.0 * p.delta_c;
  H(0, 1) = H(1, 0) = -0.5 * p.g_p;
  H(0, 2) = H(2, 0) = -0.5 * p.g_c;
  H(0, 3) = H(3, 0) = -0.5 * p.g_p;
  return H;
}

EigenSystem eigensystem(const ComplexMatrix& H, bool hermitian) {
  if (H.rows() != H.cols()) throw ValidationError("eigensystem requires a square matrix");
  const Eigen::Index n = H.rows();

  EigenSystem es;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
    if (solver.info() != Eigen::Success)
      throw NumericalError("Hermitian eigensolver did not converge");
    es.values = solver.eigenvalues().cast<Complex>();  // already ascending
    es.vectors = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(H);
    if (solver.info() != Eigen::Success)
      throw NumericalError("complex eigensolver did not converge");
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
      return vals(a).imag() < vals(b).imag();
    });
    es.values.resize(n);
    es.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      es.values(k) = vals(order[static_cast<std::size_t>(k)]);
      es.vectors.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]).normalized();
    }
  }
  fixPhases(es.vectors);
  return es;
}

std::vector<DarkState> findDarkStates(const EigenSystem& es, double tol) {
  if (tol <= 0.0) throw ValidationError("dark-state tolerance must be positive");
  if (es.vectors.rows() < 3) throw ValidationError("eigensystem is too small for a dark-state scan");
  std::vector<DarkState> out;
  for (Eigen::Index k = 0; k < es.vectors.cols(); ++k) {
    const double excited = std::abs(es.vectors(0, k));
    if (excited <= tol) {
      out.push_back(DarkState{es.values(k), es.vectors.col(k), excited,
                              std::abs(es.vectors(2, k))});
    }
  }
  return out;
}

std::array<Complex, 3> closedFormCubicRoots(const TripodParams& p) {
  // Monic form: L^3 - 2*delta_c*L^2 - (g_c^2 + 2*g_p^2)/4 * L + delta_c*g_p^2
  const double a2 = -2.0 * p.delta_c;
  const double a1 = -(p.g_c * p.g_c + 2.0 * p.g_p * p.g_p) / 4.0;
  const double a0 = p.delta_c * p.g_p * p.g_p;

  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(0, 2) = -a0;
  companion(1, 2) = -a1;
  companion(2, 2) = -a2;
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;

  Eigen::EigenSolver<Eigen::Matrix3d> solver(companion);
  if (solver.info() != Eigen::Success)
    throw NumericalError("cubic companion eigensolver did not converge");

  std::array<Complex, 3> roots{solver.eigenvalues()(0), solver.eigenvalues()(1),
                               solver.eigenvalues()(2)};
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

ClosedFormVector closedFormEigenvector(double lambda, const TripodParams& p) {
  validateParams(p);
  if (p.g_p <= 0.0 || p.g_c <= 0.0)
    throw ValidationError("closed-form eigenvector requires g_p > 0 and g_c > 0");

  ClosedFormVector out;
  out.vector << Complex(-2.0 * lambda / p.g_p, 0.0), Complex(1.0, 0.0),
      Complex(-2.0 * (p.g_p * p.g_p - 2.0 * lambda * lambda) / (p.g_c * p.g_p), 0.0),
      Complex(1.0, 0.0);

  const Eigen::Vector4cd v = out.vector;
  out.residualRotatingFrame = (buildTripodH(p) * v - lambda * v).norm();
  out.residualSymmetricFrame = (buildSymmetricFrameH(p) * v - lambda * v).norm();
  return out;
}

std::string formatMatrix(const ComplexMatrix& m) {
  std::string out;
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%+.6g%+.6gj", m(r, c).real(), m(r, c).imag());
      out += buf;
      if (c + 1 < m.cols()) out += "  ";
    }
    out += '\n';
  }
  return out;
}

}  // namespace tripod
