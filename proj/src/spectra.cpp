#include "tripod/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "tripod/analytic.hpp"

namespace tripod {

std::string evaluatorTag(Evaluator e) {
  switch (e) {
    case Evaluator::AnalyticFull: return "analytic-full";
    case Evaluator::AnalyticTwoLambda: return "analytic-two-lambda";
    case Evaluator::NumericTripod: return "numeric-tripod";
    case Evaluator::AnalyticLambdaExact: return "analytic-lambda-exact";
    case Evaluator::NumericLambda: return "numeric-lambda";
  }
  throw ValidationError("unknown evaluator");
}

Evaluator evaluatorFromTag(const std::string& tag) {
  if (tag == "analytic-full") return Evaluator::AnalyticFull;
  if (tag == "analytic-two-lambda") return Evaluator::AnalyticTwoLambda;
  if (tag == "numeric-tripod") return Evaluator::NumericTripod;
  if (tag == "analytic-lambda-exact") return Evaluator::AnalyticLambdaExact;
  if (tag == "numeric-lambda") return Evaluator::NumericLambda;
  throw ValidationError("unknown evaluator \"" + tag +
                        "\" (expected analytic-full, analytic-two-lambda, numeric-tripod, "
                        "analytic-lambda-exact or numeric-lambda)");
}

Complex evaluateResponse(Evaluator e, const Params& base, double delta_c,
                         GroundRelaxation model) {
  Params p = base;
  p.delta_c = delta_c;
  switch (e) {
    case Evaluator::AnalyticFull: return hFull(p).value;
    case Evaluator::AnalyticTwoLambda: return hTwoLambda(delta_c, p.Delta, p.g_c);
    case Evaluator::NumericTripod: return probeResponse(p, model);
    case Evaluator::AnalyticLambdaExact: return lambdaExact(p);
    case Evaluator::NumericLambda: return lambdaProbeResponse(p, model);
  }
  throw ValidationError("unknown evaluator");
}

Spectrum sweepDeltaC(Evaluator e, const Params& params, double min, double max, int n,
                     GroundRelaxation model) {
  validateParams(params);
  if (n < 2) throw ValidationError("sweep needs at least 2 points");
  if (!(min < max)) throw ValidationError("sweep needs min < max");

  Spectrum s;
  s.params = params;
  s.evaluator = e;
  s.model = model;
  s.deltaC.resize(static_cast<std::size_t>(n));
  s.h.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double dc = min + (max - min) * static_cast<double>(i) / static_cast<double>(n - 1);
    s.deltaC[static_cast<std::size_t>(i)] = dc;
    try {
      s.h[static_cast<std::size_t>(i)] = evaluateResponse(e, params, dc, model);
    } catch (const ValidationError& err) {
      throw ValidationError(std::string(err.what()) + " (at delta_c=" + std::to_string(dc) + ")");
    } catch (const NumericalError& err) {
      throw NumericalError(std::string(err.what()) + " (at delta_c=" + std::to_string(dc) + ")");
    }
  }
  return s;
}

std::string scanAxisName(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::Gc: return "g_c";
    case ScanAxis::Delta: return "Delta";
    case ScanAxis::Alpha: return "alpha";
  }
  throw ValidationError("unknown scan axis");
}

ScanAxis scanAxisFromName(const std::string& name) {
  if (name == "g_c") return ScanAxis::Gc;
  if (name == "Delta") return ScanAxis::Delta;
  if (name == "alpha") return ScanAxis::Alpha;
  throw ValidationError("unknown scan axis \"" + name + "\" (expected g_c, Delta or alpha)");
}

ScanGrid2D scan2D(Evaluator e, const Params& base, ScanAxis axis, double axisMin,
                  double axisMax, int axisN, double deltaCMin, double deltaCMax,
                  int deltaCN, GroundRelaxation model) {
  validateParams(base);
  if (axisN < 2) throw ValidationError("scan needs at least 2 axis points");
  if (!(axisMin < axisMax)) throw ValidationError("scan needs axis min < max");

  ScanGrid2D g;
  g.axis = axis;
  g.base = base;
  g.evaluator = e;
  g.model = model;
  g.axisValues.resize(static_cast<std::size_t>(axisN));
  g.absorption.resize(axisN, deltaCN);
  for (int r = 0; r < axisN; ++r) {
    const double v =
        axisMin + (axisMax - axisMin) * static_cast<double>(r) / static_cast<double>(axisN - 1);
    g.axisValues[static_cast<std::size_t>(r)] = v;
    Params row = base;
    switch (axis) {
      case ScanAxis::Gc: row.g_c = v; break;
      case ScanAxis::Delta: row.Delta = v; break;
      case ScanAxis::Alpha: row.alpha = v; break;
    }
    const Spectrum s = sweepDeltaC(e, row, deltaCMin, deltaCMax, deltaCN, model);
    if (r == 0) g.deltaC = s.deltaC;
    for (int j = 0; j < deltaCN; ++j)
      g.absorption(r, j) = s.h[static_cast<std::size_t>(j)].imag();
  }
  return g;
}

std::string regimeName(Regime r) {
  switch (r) {
    case Regime::Separated: return "separated";
    case Regime::Eia: return "eia";
    case Regime::Merged: return "merged";
  }
  throw ValidationError("unknown regime");
}

Regime overlapRegime(double g_c, double Delta, double tol) {
  if (!(g_c > 0.0)) throw ValidationError("g_c must be positive for window analysis");
  if (!(Delta >= 0.0)) throw ValidationError("Delta must be nonnegative for window analysis");
  if (!(tol >= 0.0)) throw ValidationError("regime tolerance must be nonnegative");
  if (std::abs(g_c - Delta) <= tol * std::max(g_c, Delta)) return Regime::Eia;
  return g_c < Delta ? Regime::Separated : Regime::Merged;
}

WindowReport analyzeWindows(const Spectrum& s, const WindowOptions& opt) {
  const std::size_t n = s.deltaC.size();
  if (n < 5) throw ValidationError("spectrum is too short for window analysis");

  WindowReport report;
  report.regime = overlapRegime(s.params.g_c, s.params.Delta, opt.regimeTol);

  // Strict local maxima of the absorption above the peak threshold.
  std::vector<std::size_t> peakIdx;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double im = s.h[k].imag();
    if (im > opt.peakThreshold && im > s.h[k - 1].imag() && im > s.h[k + 1].imag())
      peakIdx.push_back(k);
  }
  for (std::size_t k : peakIdx) report.peaks.push_back({s.deltaC[k], s.h[k].imag()});

  if (report.regime == Regime::Eia) {
    std::size_t nearest = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(s.deltaC[k]) < std::abs(s.deltaC[nearest])) nearest = k;
    report.eiaValue = s.h[nearest].imag();
  }

  if (peakIdx.size() < 2) {
    report.diagnostic = "fewer than 2 absorption peaks above threshold; no windows extracted";
    return report;
  }

  const double gridStep = s.deltaC[1] - s.deltaC[0];
  for (std::size_t w = 0; w + 1 < peakIdx.size(); ++w) {
    const std::size_t a = peakIdx[w];
    const std::size_t b = peakIdx[w + 1];
    double floorIm = s.h[a + 1].imag();
    for (std::size_t k = a + 1; k < b; ++k) floorIm = std::min(floorIm, s.h[k].imag());
    if (floorIm >= opt.floorFraction * std::min(s.h[a].imag(), s.h[b].imag())) continue;
    // Center is the midpoint of the flanking peaks: +-Delta in the separated
    // regime and +-g_c in the merged one (the interior argmin is dragged
    // outward by the far-arm tail once the windows overlap).
    const double center = 0.5 * (s.deltaC[a] + s.deltaC[b]);
    // The low-absorption stretch straddling delta_c = 0 between the two
    // windows (or the central dip of the degenerate Delta = 0 spectrum) is
    // not a transparency window; windows sit at +-Delta or +-g_c.
    if (std::abs(center) <= gridStep * (1.0 + 1e-9)) continue;
    report.windows.push_back({center, s.deltaC[b] - s.deltaC[a], floorIm});
  }
  std::sort(report.windows.begin(), report.windows.end(),
            [](const Window& x, const Window& y) { return x.center < y.center; });
  if (report.windows.empty())
    report.diagnostic = "no peak pair encloses a sufficiently deep off-center minimum";
  return report;
}

}  // namespace tripod
