// spectra.hpp — sweep engines for 1D spectra and 2D absorption maps, plus
// transparency-window extraction and regime classification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripod/liouville.hpp"
#include "tripod/params.hpp"
#include "tripod/types.hpp"

namespace tripod {

enum class Evaluator {
  AnalyticFull,        // hFull
  AnalyticTwoLambda,   // hTwoLambda
  NumericTripod,       // probeResponse
  AnalyticLambdaExact, // lambdaExact
  NumericLambda,       // lambdaProbeResponse
};

std::string evaluatorTag(Evaluator e);
Evaluator evaluatorFromTag(const std::string& tag);

// Response of one evaluator at one detuning; base.delta_c is ignored.
Complex evaluateResponse(Evaluator e, const Params& base, double delta_c,
                         GroundRelaxation model = GroundRelaxation::Exchange);

// Ordered (delta_c, h) samples from one evaluator with a parameter snapshot.
struct Spectrum {
  Params params;
  Evaluator evaluator = Evaluator::AnalyticTwoLambda;
  GroundRelaxation model = GroundRelaxation::Exchange;
  std::vector<double> deltaC;  // strictly increasing, >= 2 points
  std::vector<Complex> h;
};

// n uniformly spaced detunings on [min, max] inclusive. Evaluator errors are
// rethrown with the offending delta_c attached.
Spectrum sweepDeltaC(Evaluator e, const Params& params, double min, double max, int n,
                     GroundRelaxation model = GroundRelaxation::Exchange);

enum class ScanAxis { Gc, Delta, Alpha };

std::string scanAxisName(ScanAxis axis);
ScanAxis scanAxisFromName(const std::string& name);

// Absorption Im(h) over an (axis x delta_c) grid; row r is the sweep with the
// axis variable set to axisValues[r].
struct ScanGrid2D {
  ScanAxis axis = ScanAxis::Gc;
  std::vector<double> axisValues;
  std::vector<double> deltaC;
  Eigen::MatrixXd absorption;  // axisValues.size() rows, deltaC.size() cols
  Params base;
  Evaluator evaluator = Evaluator::AnalyticTwoLambda;
  GroundRelaxation model = GroundRelaxation::Exchange;
};

ScanGrid2D scan2D(Evaluator e, const Params& base, ScanAxis axis, double axisMin,
                  double axisMax, int axisN, double deltaCMin, double deltaCMax,
                  int deltaCN, GroundRelaxation model = GroundRelaxation::Exchange);

// Separated: g_c < Delta (two distinct windows at +-Delta, width 2 g_c).
// Merged: g_c > Delta (windows centered at +-g_c, width 2 Delta).
// Eia: |g_c - Delta| <= tol * max(g_c, Delta) (flanking peaks coincide at
// delta_c = 0 and the absorption there doubles).
enum class Regime { Separated, Eia, Merged };

std::string regimeName(Regime r);

// Requires g_c > 0 and Delta >= 0.
Regime overlapRegime(double g_c, double Delta, double tol = 0.02);

struct Window {
  double center;           // midpoint of the flanking peaks
  double width;            // separation of the flanking peaks
  double floorAbsorption;  // minimum of Im(h) between the peaks
};

struct SpectrumPeak {
  double delta_c;
  double imH;
};

struct WindowOptions {
  double peakThreshold = 0.1;  // strict local maxima of Im(h) must exceed this
  double floorFraction = 0.5;  // interior min must fall below this times min(peaks)
  double regimeTol = 0.02;     // tolerance handed to overlapRegime
};

struct WindowReport {
  std::vector<Window> windows;  // sorted by center
  std::vector<SpectrumPeak> peaks;
  Regime regime = Regime::Separated;
  std::optional<double> eiaValue;  // Im(h) nearest delta_c = 0, eia regime only
  std::string diagnostic;          // nonempty when no windows could be extracted
};

// Extracts transparency windows from an absorption spectrum. A window is an
// adjacent pair of peaks whose interior minimum falls below
// floorFraction * min(peak heights). A candidate whose center lies within one
// grid step of delta_c = 0 is never a window: the tripod windows sit at
// +-Delta (or +-g_c when merged), and the low-absorption stretch straddling
// zero between them — or the central dip of the degenerate Delta = 0
// spectrum — is not a transparency window.
WindowReport analyzeWindows(const Spectrum& s, const WindowOptions& opt = {});

}  // namespace tripod
