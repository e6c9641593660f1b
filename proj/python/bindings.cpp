// bindings.cpp — python module over the C++ core (tripod_eit._core)
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "tripod/analytic.hpp"
#include "tripod/bfield.hpp"
#include "tripod/cli.hpp"
#include "tripod/hamiltonian.hpp"
#include "tripod/io.hpp"
#include "tripod/liouville.hpp"
#include "tripod/presets.hpp"
#include "tripod/spectra.hpp"
#include "tripod/version.hpp"

namespace py = pybind11;
using namespace tripod;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Absorption and dispersion of a four-level tripod atom: "
            "Hamiltonians, Lindblad steady states, closed-form "
            "susceptibilities, sweeps and window analysis.";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init([](double g_p, double g_c, double delta_c, double Delta, double alpha,
                       double beta) {
             Params p;
             p.g_p = g_p;
             p.g_c = g_c;
             p.delta_c = delta_c;
             p.Delta = Delta;
             p.alpha = alpha;
             p.beta = beta;
             return p;
           }),
           py::arg("g_p") = 0.01, py::arg("g_c") = 5.0, py::arg("delta_c") = 0.0,
           py::arg("Delta") = 5.0, py::arg("alpha") = 0.001, py::arg("beta") = 0.666)
      .def_readwrite("g_p", &Params::g_p)
      .def_readwrite("g_c", &Params::g_c)
      .def_readwrite("delta_c", &Params::delta_c)
      .def_readwrite("Delta", &Params::Delta)
      .def_readwrite("alpha", &Params::alpha)
      .def_readwrite("beta", &Params::beta)
      .def(py::self == py::self)
      .def("__repr__", [](const Params& p) {
        std::ostringstream ss;
        ss << "Params(g_p=" << p.g_p << ", g_c=" << p.g_c << ", delta_c=" << p.delta_c
           << ", Delta=" << p.Delta << ", alpha=" << p.alpha << ", beta=" << p.beta << ")";
        return ss.str();
      });

  m.def("validate_params", &validateParams, py::arg("params"));
  m.def("params_to_json", &paramsToJson, py::arg("params"));
  m.def("params_from_json", &paramsFromJson, py::arg("text"));

  py::enum_<SystemKind>(m, "SystemKind")
      .value("TRIPOD", SystemKind::Tripod)
      .value("LAMBDA", SystemKind::Lambda);
  py::enum_<GroundRelaxation>(m, "GroundRelaxation")
      .value("EXCHANGE", GroundRelaxation::Exchange)
      .value("DEPHASING", GroundRelaxation::Dephasing);
  py::enum_<Evaluator>(m, "Evaluator")
      .value("ANALYTIC_FULL", Evaluator::AnalyticFull)
      .value("ANALYTIC_TWO_LAMBDA", Evaluator::AnalyticTwoLambda)
      .value("NUMERIC_TRIPOD", Evaluator::NumericTripod)
      .value("ANALYTIC_LAMBDA_EXACT", Evaluator::AnalyticLambdaExact)
      .value("NUMERIC_LAMBDA", Evaluator::NumericLambda);
  py::enum_<ScanAxis>(m, "ScanAxis")
      .value("GC", ScanAxis::Gc)
      .value("DELTA", ScanAxis::Delta)
      .value("ALPHA", ScanAxis::Alpha);
  py::enum_<Regime>(m, "Regime")
      .value("SEPARATED", Regime::Separated)
      .value("EIA", Regime::Eia)
      .value("MERGED", Regime::Merged);

  m.def("evaluator_tag", &evaluatorTag);
  m.def("evaluator_from_tag", &evaluatorFromTag);

  // hamiltonian
  m.def("build_tripod_h", &buildTripodH, py::arg("params"));
  m.def("build_lambda_h", &buildLambdaH, py::arg("params"));
  m.def("build_symmetric_frame_h", &buildSymmetricFrameH, py::arg("params"));
  m.def("format_matrix", &formatMatrix, py::arg("matrix"));

  py::class_<EigenSystem>(m, "EigenSystem")
      .def_readonly("values", &EigenSystem::values)
      .def_readonly("vectors", &EigenSystem::vectors);
  m.def("eigensystem", &eigensystem, py::arg("H"), py::arg("hermitian") = true);

  py::class_<DarkState>(m, "DarkState")
      .def_readonly("eigenvalue", &DarkState::eigenvalue)
      .def_readonly("vector", &DarkState::vector)
      .def_readonly("excited_amplitude", &DarkState::excitedAmplitude)
      .def_readonly("coupling_amplitude", &DarkState::couplingAmplitude);
  m.def("find_dark_states", &findDarkStates, py::arg("eigensystem"), py::arg("tol") = 1e-8);

  m.def("closed_form_cubic_roots", &closedFormCubicRoots, py::arg("params"));
  py::class_<ClosedFormVector>(m, "ClosedFormVector")
      .def_readonly("vector", &ClosedFormVector::vector)
      .def_readonly("residual_rotating_frame", &ClosedFormVector::residualRotatingFrame)
      .def_readonly("residual_symmetric_frame", &ClosedFormVector::residualSymmetricFrame);
  m.def("closed_form_eigenvector", &closedFormEigenvector, py::arg("lam"), py::arg("params"));

  // liouville
  py::class_<CollapseChannel>(m, "CollapseChannel")
      .def(py::init([](int from_state, int to_state, double rate) {
             return CollapseChannel{from_state, to_state, rate};
           }),
           py::arg("from_state"), py::arg("to_state"), py::arg("rate"))
      .def_readwrite("from_state", &CollapseChannel::from)
      .def_readwrite("to_state", &CollapseChannel::to)
      .def_readwrite("rate", &CollapseChannel::rate);
  m.def("collapse_channels", &collapseChannels, py::arg("params"), py::arg("model"),
        py::arg("system"));
  m.def("drive_hamiltonian", &driveHamiltonian, py::arg("params"), py::arg("system"));
  m.def("build_liouvillian", &buildLiouvillian, py::arg("H"), py::arg("channels"));
  m.def("steady_state", &steadyState, py::arg("L"));
  m.def("evolve", &evolve, py::arg("H"), py::arg("channels"), py::arg("rho0"), py::arg("t"),
        py::arg("dt"));
  m.def("default_time_step", &defaultTimeStep, py::arg("params"));
  m.def("probe_response", &probeResponse, py::arg("params"),
        py::arg("model") = GroundRelaxation::Exchange);
  m.def("lambda_probe_response", &lambdaProbeResponse, py::arg("params"),
        py::arg("model") = GroundRelaxation::Exchange);

  // analytic
  py::class_<ComplexResponse>(m, "ComplexResponse")
      .def_readonly("value", &ComplexResponse::value)
      .def_readonly("left", &ComplexResponse::left)
      .def_readonly("right", &ComplexResponse::right);
  m.def("h0", &h0, py::arg("x"), py::arg("g_c"));
  m.def("im_h0", &imH0, py::arg("x"), py::arg("g_c"));
  m.def("h_two_lambda", &hTwoLambda, py::arg("delta_c"), py::arg("Delta"), py::arg("g_c"));
  m.def("h_full", &hFull, py::arg("params"));
  m.def("lambda_exact", &lambdaExact, py::arg("params"));
  m.def("lambda_weak_probe", &lambdaWeakProbe, py::arg("delta_c"), py::arg("Delta"),
        py::arg("g_c"));

  // spectra
  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("params", &Spectrum::params)
      .def_readonly("evaluator", &Spectrum::evaluator)
      .def_readonly("model", &Spectrum::model)
      .def_readonly("delta_c", &Spectrum::deltaC)
      .def_readonly("h", &Spectrum::h);
  m.def("evaluate_response", &evaluateResponse, py::arg("evaluator"), py::arg("params"),
        py::arg("delta_c"), py::arg("model") = GroundRelaxation::Exchange);
  m.def("sweep_delta_c", &sweepDeltaC, py::arg("evaluator"), py::arg("params"), py::arg("min"),
        py::arg("max"), py::arg("n"), py::arg("model") = GroundRelaxation::Exchange);

  py::class_<ScanGrid2D>(m, "ScanGrid2D")
      .def_readonly("axis", &ScanGrid2D::axis)
      .def_readonly("axis_values", &ScanGrid2D::axisValues)
      .def_readonly("delta_c", &ScanGrid2D::deltaC)
      .def_readonly("absorption", &ScanGrid2D::absorption)
      .def_readonly("base", &ScanGrid2D::base)
      .def_readonly("evaluator", &ScanGrid2D::evaluator);
  m.def("scan_2d", &scan2D, py::arg("evaluator"), py::arg("params"), py::arg("axis"),
        py::arg("axis_min"), py::arg("axis_max"), py::arg("axis_n"), py::arg("delta_c_min"),
        py::arg("delta_c_max"), py::arg("delta_c_n"),
        py::arg("model") = GroundRelaxation::Exchange);

  m.def("overlap_regime", &overlapRegime, py::arg("g_c"), py::arg("Delta"),
        py::arg("tol") = 0.02);
  m.def("regime_name", &regimeName);

  py::class_<Window>(m, "Window")
      .def_readonly("center", &Window::center)
      .def_readonly("width", &Window::width)
      .def_readonly("floor_absorption", &Window::floorAbsorption);
  py::class_<SpectrumPeak>(m, "SpectrumPeak")
      .def_readonly("delta_c", &SpectrumPeak::delta_c)
      .def_readonly("im_h", &SpectrumPeak::imH);
  py::class_<WindowOptions>(m, "WindowOptions")
      .def(py::init<>())
      .def_readwrite("peak_threshold", &WindowOptions::peakThreshold)
      .def_readwrite("floor_fraction", &WindowOptions::floorFraction)
      .def_readwrite("regime_tol", &WindowOptions::regimeTol);
  py::class_<WindowReport>(m, "WindowReport")
      .def_readonly("windows", &WindowReport::windows)
      .def_readonly("peaks", &WindowReport::peaks)
      .def_readonly("regime", &WindowReport::regime)
      .def_readonly("eia_value", &WindowReport::eiaValue)
      .def_readonly("diagnostic", &WindowReport::diagnostic);
  m.def("analyze_windows", &analyzeWindows, py::arg("spectrum"),
        py::arg("options") = WindowOptions{});

  // presets
  py::class_<FigurePreset>(m, "FigurePreset")
      .def_readonly("name", &FigurePreset::name)
      .def_readonly("evaluator", &FigurePreset::evaluator)
      .def_readonly("model", &FigurePreset::model)
      .def_readonly("base", &FigurePreset::base)
      .def_readonly("panel_axis", &FigurePreset::panelAxis)
      .def_readonly("panel_values", &FigurePreset::panelValues)
      .def_readonly("scan_axis", &FigurePreset::scanAxis)
      .def_readonly("scan_min", &FigurePreset::scanMin)
      .def_readonly("scan_max", &FigurePreset::scanMax)
      .def_readonly("scan_axis_n", &FigurePreset::scanAxisN)
      .def_readonly("delta_c_min", &FigurePreset::deltaCMin)
      .def_readonly("delta_c_max", &FigurePreset::deltaCMax)
      .def_readonly("delta_c_n", &FigurePreset::deltaCN)
      .def_readonly("note", &FigurePreset::note);
  m.def("preset_for", &presetFor, py::arg("figure"));
  m.def("figure_names", &figureNames);
  m.def("apply_panel_value", &applyPanelValue, py::arg("preset"), py::arg("value"));

  // io
  m.def("write_spectrum_csv", &writeSpectrumCsv, py::arg("spectrum"), py::arg("path"),
        py::arg("note") = std::string());
  m.def("read_spectrum_csv", &readSpectrumCsv, py::arg("path"));
  m.def("write_spectrum_json", &writeSpectrumJson, py::arg("spectrum"), py::arg("path"),
        py::arg("note") = std::string());
  m.def("write_spectrum_svg", &writeSpectrumSvg, py::arg("spectrum"), py::arg("path"),
        py::arg("title") = std::string());
  m.def("write_scan_csv", &writeScanCsv, py::arg("scan"), py::arg("path"),
        py::arg("note") = std::string());
  m.def("write_scan_json", &writeScanJson, py::arg("scan"), py::arg("path"),
        py::arg("note") = std::string());
  m.def("write_scan_svg", &writeScanSvg, py::arg("scan"), py::arg("path"),
        py::arg("title") = std::string());
  m.def("window_report_to_json", &windowReportToJson, py::arg("report"));

  // bfield + cli
  m.def(
      "bfield_gauss",
      [](double splitting_mhz, double lande_g) {
        return bfieldForSplitting({splitting_mhz, lande_g});
      },
      py::arg("splitting_mhz"), py::arg("lande_g") = 1.0);
  m.def("run_command", &runCommand, py::arg("args"),
        "Run one CLI subcommand; returns the would-be process exit status.");
}
