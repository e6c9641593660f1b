#include "tripod/liouville.hpp"

#include <cmath>
#include <string>

namespace tripod {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

int dimensionOf(SystemKind system) { return system == SystemKind::Tripod ? 4 : 3; }

void checkDensity(const ComplexMatrix& rho, const char* who) {
  if (rho.rows() != rho.cols()) throw ValidationError(std::string(who) + ": rho must be square");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-8)
    throw ValidationError(std::string(who) + ": rho must have unit trace");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw ValidationError(std::string(who) + ": rho must be Hermitian");
}

}  // namespace

std::string groundRelaxationTag(GroundRelaxation model) {
  return model == GroundRelaxation::Exchange ? "exchange" : "dephasing";
}

GroundRelaxation groundRelaxationFromTag(const std::string& tag) {
  if (tag == "exchange") return GroundRelaxation::Exchange;
  if (tag == "dephasing") return GroundRelaxation::Dephasing;
  throw ValidationError("unknown relaxation model \"" + tag + "\" (expected exchange or dephasing)");
}

std::vector<CollapseChannel> collapseChannels(const Params& p, GroundRelaxation model,
                                              SystemKind system) {
  validateParams(p);
  const int n = dimensionOf(system);
  std::vector<CollapseChannel> channels;
  for (int j = 1; j < n; ++j) channels.push_back({0, j, p.beta});
  if (p.alpha > 0.0) {
    if (model == GroundRelaxation::Exchange) {
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          if (i != j) channels.push_back({i, j, p.alpha});
    } else {
      for (int k = 1; k < n; ++k) channels.push_back({k, k, p.alpha});
    }
  }
  return channels;
}

ComplexMatrix driveHamiltonian(const Params& p, SystemKind system) {
  validateParams(p);
  const int n = dimensionOf(system);
  ComplexMatrix H = ComplexMatrix::Zero(n, n);
  H(1, 1) = p.delta_c - p.Delta;
  H(0, 1) = H(1, 0) = -p.g_p;
  H(0, 2) = H(2, 0) = -p.g_c;
  if (system == SystemKind::Tripod) {
    H(3, 3) = p.delta_c + p.Delta;
    H(0, 3) = H(3, 0) = -p.g_p;
  }
  return H;
}

ComplexMatrix buildLiouvillian(const ComplexMatrix& H,
                               const std::vector<CollapseChannel>& channels) {
  if (H.rows() != H.cols()) throw ValidationError("Liouvillian requires a square Hamiltonian");
  const Eigen::Index n = H.rows();
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("Liouvillian requires a Hermitian Hamiltonian");

  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix L = -kI * (kron(id, H) - kron(H.transpose(), id));

  for (const auto& ch : channels) {
    if (ch.from < 0 || ch.from >= n || ch.to < 0 || ch.to >= n)
      throw ValidationError("collapse channel label out of range for dimension " + std::to_string(n));
    if (ch.rate < 0.0) throw ValidationError("collapse rate must be nonnegative");
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    c(ch.to, ch.from) = std::sqrt(ch.rate);
    const ComplexMatrix cdc = c.adjoint() * c;
    L += kron(c.conjugate(), c) -
         0.5 * (kron(id, cdc) + kron(cdc.transpose(), id));
  }
  return L;
}

ComplexVector vecDensity(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

ComplexMatrix unvecDensity(const ComplexVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) throw ValidationError("vectorized density has non-square size");
  ComplexMatrix m(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = v(k++);
  return m;
}

ComplexMatrix steadyState(const ComplexMatrix& L) {
  if (L.rows() != L.cols()) throw ValidationError("steadyState requires a square Liouvillian");
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(L.rows()))));
  if (n * n != L.rows()) throw ValidationError("Liouvillian size is not a perfect square");

  Eigen::JacobiSVD<ComplexMatrix> svd(L, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma(0);

  Eigen::Index nullDim = 0;
  if (smax == 0.0) {
    nullDim = L.rows();
  } else {
    for (Eigen::Index k = 0; k < sigma.size(); ++k)
      if (sigma(k) <= 1e-8 * smax) ++nullDim;
  }
  if (nullDim != 1)
    throw NumericalError("no unique steady state: Liouvillian null space has dimension " +
                         std::to_string(nullDim));

  ComplexMatrix rho = unvecDensity(svd.matrixV().col(L.rows() - 1));
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-10)
    throw NumericalError("steady-state candidate has vanishing trace");
  rho /= tr;
  rho = 0.5 * (rho + rho.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> evs(rho);
  if (evs.info() != Eigen::Success || evs.eigenvalues().minCoeff() < -1e-9)
    throw NumericalError("steady state is not positive semidefinite");
  const double residual = (L * vecDensity(rho)).norm();
  if (residual > 1e-10)
    throw NumericalError("steady-state residual " + std::to_string(residual) + " exceeds 1e-10");
  return rho;
}

double defaultTimeStep(const Params& p) {
  return 0.01 / std::max({1.0, p.g_c, std::abs(p.delta_c) + p.Delta, p.beta});
}

ComplexMatrix evolve(const ComplexMatrix& H, const std::vector<CollapseChannel>& channels,
                     const ComplexMatrix& rho0, double t, double dt) {
  if (!(dt > 0.0)) throw ValidationError("evolve requires dt > 0");
  if (!(t >= 0.0)) throw ValidationError("evolve requires t >= 0");
  checkDensity(rho0, "evolve");
  if (t == 0.0) return rho0;

  const ComplexMatrix L = buildLiouvillian(H, channels);
  const auto steps = static_cast<long>(std::ceil(t / dt));
  const double h = t / static_cast<double>(steps);

  ComplexVector v = vecDensity(rho0);
  const Eigen::Index n = rho0.rows();
  ComplexVector k1(v.size()), k2(v.size()), k3(v.size()), k4(v.size());

  auto traceOf = [&](const ComplexVector& w) {
    Complex tr = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) tr += w(i * n + i);
    return tr;
  };

  for (long s = 0; s < steps; ++s) {
    k1.noalias() = L * v;
    k2.noalias() = L * (v + 0.5 * h * k1);
    k3.noalias() = L * (v + 0.5 * h * k2);
    k4.noalias() = L * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if ((s & 1023) == 1023 || s + 1 == steps) {
      const double traceErr = std::abs(traceOf(v) - Complex(1.0, 0.0));
      if (!std::isfinite(v.squaredNorm()) || traceErr > 1e-9)
        throw NumericalError("time integration unstable at t=" +
                             std::to_string((s + 1) * h) + " (trace error " +
                             std::to_string(traceErr) + ")");
    }
  }
  return unvecDensity(v);
}

Complex probeResponse(const TripodParams& p, GroundRelaxation model) {
  validateParams(p);
  if (p.g_p <= 0.0) throw ValidationError("g_p must be positive for the probe response");
  const ComplexMatrix H = driveHamiltonian(p, SystemKind::Tripod);
  const ComplexMatrix L = buildLiouvillian(H, collapseChannels(p, model, SystemKind::Tripod));
  const ComplexMatrix rho = steadyState(L);
  return (rho(0, 1) + rho(0, 3)) / p.g_p;
}

Complex lambdaProbeResponse(const LambdaParams& p, GroundRelaxation model) {
  validateParams(p);
  if (p.g_p <= 0.0) throw ValidationError("g_p must be positive for the probe response");
  const ComplexMatrix H = driveHamiltonian(p, SystemKind::Lambda);
  const ComplexMatrix L = buildLiouvillian(H, collapseChannels(p, model, SystemKind::Lambda));
  const ComplexMatrix rho = steadyState(L);
  return rho(0, 1) / p.g_p;
}

}  // namespace tripod
