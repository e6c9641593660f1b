// presets.hpp — named parameter presets for the built-in figure scans
#pragma once

#include <string>
#include <vector>

#include "tripod/params.hpp"
#include "tripod/spectra.hpp"

namespace tripod {

// One built-in scan. Either panelValues is nonempty (one 1D spectrum per
// value of panelAxis) or scanAxisN >= 2 (a 2D map over scanAxis).
struct FigurePreset {
  std::string name;
  Evaluator evaluator = Evaluator::AnalyticTwoLambda;
  GroundRelaxation model = GroundRelaxation::Exchange;
  Params base;

  std::string panelAxis;            // "g_c" | "Delta" | "alpha", empty for scans
  std::vector<double> panelValues;

  ScanAxis scanAxis = ScanAxis::Gc;
  double scanMin = 0.0;
  double scanMax = 0.0;
  int scanAxisN = 0;                // 0 for panel presets

  double deltaCMin = -15.0;
  double deltaCMax = 15.0;
  int deltaCN = 601;

  std::string note;  // carried into artifact metadata
};

// Known names: fig2, fig5, fig6, fig7, fig8. Throws ValidationError otherwise.
FigurePreset presetFor(const std::string& figure);

std::vector<std::string> figureNames();

// Base params with the panel axis set to the given value.
Params applyPanelValue(const FigurePreset& preset, double value);

}  // namespace tripod
