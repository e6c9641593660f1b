#include "tripod/analytic.hpp"

#include <cmath>

namespace tripod {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex h0(double x, double g_c) {
  if (!(g_c >= 0.0)) throw ValidationError("g_c must be nonnegative");
  if (g_c == 0.0 && x == 0.0) return Complex{0.0, 0.0};  // removable corner
  return x / (g_c * g_c - x * (kI + x));
}

double imH0(double x, double g_c) {
  if (!(g_c > 0.0)) throw ValidationError("g_c must be positive");
  const double a = g_c * g_c - x * x;
  return x * x / (a * a + x * x);
}

Complex hTwoLambda(double delta_c, double Delta, double g_c) {
  return 0.5 * (h0(delta_c - Delta, g_c) + h0(delta_c + Delta, g_c));
}

ComplexResponse hFull(const TripodParams& p) {
  validateParams(p);
  const double a = p.alpha;
  const double b = p.beta;
  const double gc2 = p.g_c * p.g_c;
  const double D = p.Delta;
  const double dc = p.delta_c;

  const double prefDenom = 9.0 * a * b + 4.0 * (2.0 * a + b) * gc2;
  if (prefDenom == 0.0)
    throw ValidationError("response prefactor vanishes: need g_c > 0 or alpha > 0");

  const Complex hl = (3.0 * a * (2.0 * a + kI * D - kI * dc) + gc2 * (a + 2.0 * kI * D - 2.0 * kI * dc)) /
                     (gc2 - (kI - D + dc) * (2.0 * kI * a - D + dc));
  const Complex hr = (3.0 * a * (2.0 * a - kI * D - kI * dc) + gc2 * (a - 2.0 * kI * D - 2.0 * kI * dc)) /
                     (gc2 - (kI + D + dc) * (2.0 * kI * a + D + dc));
  const Complex h = kI * b / prefDenom * (hl + hr);
  return ComplexResponse{h, hl, hr};
}

Complex lambdaExact(const LambdaParams& p) {
  validateParams(p);
  const double gp2 = p.g_p * p.g_p;
  const double gc2 = p.g_c * p.g_c;
  const double y = p.Delta - p.delta_c;

  const Complex A = gc2 * (gc2 + gp2 - y * (kI + y)) * y;
  const double B = gc2 * (3.0 * gp2 * gp2 + y * y * (1.0 + y * y + 4.0 * gp2)) +
                   gc2 * gc2 * (3.0 * gp2 - 2.0 * y * y) + gc2 * gc2 * gc2 +
                   gp2 * (gp2 * gp2 + y * y);
  if (B == 0.0) throw NumericalError("Lambda response singular point: B = 0");
  return -A / B;
}

Complex lambdaWeakProbe(double delta_c, double Delta, double g_c) {
  return h0(delta_c - Delta, g_c);
}

}  // namespace tripod
