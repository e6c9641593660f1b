#include "tripod/presets.hpp"

#include <algorithm>

namespace tripod {

namespace {

Params stockParams() {
  Params p;
  p.g_p = 0.01;
  p.g_c = 5.0;
  p.delta_c = 0.0;
  p.Delta = 5.0;
  p.alpha = 0.001;
  p.beta = 0.666;
  return p;
}

}  // namespace

FigurePreset presetFor(const std::string& figure) {
  FigurePreset f;
  f.name = figure;
  f.base = stockParams();

  if (figure == "fig2") {
    // Steady-state absorption/dispersion panels across the coupling regimes.
    f.evaluator = Evaluator::NumericTripod;
    f.panelAxis = "g_c";
    f.panelValues = {1.0, 2.5, 5.0, 7.5};
    f.note = "panel g_c values 1, 2.5, 5, 7.5 span the separated, eia and merged regimes";
  } else if (figure == "fig5") {
    f.evaluator = Evaluator::AnalyticTwoLambda;
    f.scanAxis = ScanAxis::Gc;
    f.scanMin = 0.0;
    f.scanMax = 10.0;
    f.scanAxisN = 101;
    f.note = "coupling strength scan at fixed Delta=5";
  } else if (figure == "fig6") {
    f.evaluator = Evaluator::AnalyticTwoLambda;
    f.scanAxis = ScanAxis::Delta;
    f.scanMin = 0.0;
    f.scanMax = 10.0;
    f.scanAxisN = 101;
    f.note = "Zeeman splitting scan at fixed g_c=5";
  } else if (figure == "fig7") {
    f.evaluator = Evaluator::AnalyticTwoLambda;
    f.panelAxis = "Delta";
    f.panelValues = {0.0, 2.5, 5.0, 7.5};
    f.note = "Zeeman splitting panels at fixed g_c=5";
  } else if (figure == "fig8") {
    f.evaluator = Evaluator::AnalyticFull;
    f.base.Delta = 2.5;
    f.panelAxis = "alpha";
    f.panelValues = {0.001, 0.1};
    f.note = "non-radiative damping comparison at g_c=5, Delta=2.5";
  } else {
    throw ValidationError("unknown figure name \"" + figure +
                          "\" (expected fig2, fig5, fig6, fig7 or fig8)");
  }
  validateParams(f.base);
  return f;
}

std::vector<std::string> figureNames() { return {"fig2", "fig5", "fig6", "fig7", "fig8"}; }

Params applyPanelValue(const FigurePreset& preset, double value) {
  Params p = preset.base;
  if (preset.panelAxis == "g_c") {
    p.g_c = value;
  } else if (preset.panelAxis == "Delta") {
    p.Delta = value;
  } else if (preset.panelAxis == "alpha") {
    p.alpha = value;
  } else {
    throw ValidationError("preset \"" + preset.name + "\" has no panel axis");
  }
  return validateParams(p);
}

}  // namespace tripod
