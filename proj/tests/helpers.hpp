// helpers.hpp — shared generators and assertion helpers for the test suites
#pragma once

#include <random>
#include <string>

#include "tripod/params.hpp"
#include "tripod/types.hpp"

namespace tripod::testing {

// Parameter draws with healthy relaxation rates, so steady states are unique
// and reachable within a short integration horizon.
inline Params randomParams(std::mt19937_64& rng) {
  auto uni = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  Params p;
  p.g_p = uni(0.05, 0.5);
  p.g_c = uni(0.5, 2.0);
  p.delta_c = uni(-3.0, 3.0);
  p.Delta = uni(0.0, 3.0);
  p.alpha = uni(0.3, 1.0);
  p.beta = uni(0.5, 1.2);
  return p;
}

inline ComplexMatrix randomHermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (m + m.adjoint()).eval();
}

inline ComplexMatrix randomDensity(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

// Message of the exception thrown by f, or "" if nothing was thrown.
template <class E, class F>
std::string thrownMessage(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  } catch (...) {
    return "(different exception type)";
  }
  return "";
}

inline bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace tripod::testing
