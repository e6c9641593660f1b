#include "tripod/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tripod/analytic.hpp"
#include "tripod/bfield.hpp"
#include "tripod/hamiltonian.hpp"
#include "tripod/io.hpp"
#include "tripod/presets.hpp"
#include "tripod/version.hpp"

namespace tripod {

namespace {

namespace fs = std::filesystem;

std::string fmtg(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Everything a run needs; config-file values land here first, flags override.
struct Options {
  Params params;
  std::string evaluator = "analytic-full";
  std::string model = "exchange";
  double deltaCMin = -15.0;
  double deltaCMax = 15.0;
  int points = 601;
  std::string axis = "g_c";
  double axisMin = 0.0;
  double axisMax = 10.0;
  int axisPoints = 101;
  std::string out = ".";
  std::string formats = "csv";
  std::string figure;
  std::string system = "tripod";
  double tol = 1e-8;
  bool windows = false;
  double splittingMHz = 0.0;
  double landeG = 1.0;
};

void loadConfig(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (j.contains("params")) o.params = paramsFromJson(j["params"].dump());
  auto str = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = j[key].get<std::string>();
  };
  str("evaluator", o.evaluator);
  str("model", o.model);
  str("out", o.out);
  str("figure", o.figure);
  str("system", o.system);
  if (j.contains("formats")) {
    std::string joined;
    for (const auto& f : j["formats"]) joined += (joined.empty() ? "" : ",") + f.get<std::string>();
    o.formats = joined;
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (s.contains("deltac_min")) o.deltaCMin = s["deltac_min"].get<double>();
    if (s.contains("deltac_max")) o.deltaCMax = s["deltac_max"].get<double>();
    if (s.contains("points")) o.points = s["points"].get<int>();
  }
  if (j.contains("scan")) {
    const auto& s = j["scan"];
    if (s.contains("axis")) o.axis = s["axis"].get<std::string>();
    if (s.contains("min")) o.axisMin = s["min"].get<double>();
    if (s.contains("max")) o.axisMax = s["max"].get<double>();
    if (s.contains("points")) o.axisPoints = s["points"].get<int>();
  }
  if (j.contains("windows")) o.windows = j["windows"].get<bool>();
}

std::set<std::string> parseFormats(const std::string& formats) {
  std::set<std::string> out;
  std::stringstream ss(formats);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "csv" && item != "json" && item != "svg")
      throw ValidationError("unknown format \"" + item + "\" (expected csv, json or svg)");
    out.insert(item);
  }
  if (out.empty()) throw ValidationError("no output format selected");
  return out;
}

fs::path ensureOutDir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void addParamFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--gp", o.params.g_p, "probe Rabi frequency (units of gamma)");
  cmd->add_option("--gc", o.params.g_c, "coupling Rabi frequency (units of gamma)");
  cmd->add_option("--delta", o.params.Delta, "Zeeman splitting (units of gamma)");
  cmd->add_option("--alpha", o.params.alpha, "non-radiative/radiative damping ratio");
  cmd->add_option("--beta", o.params.beta, "radiative damping rate per branch (units of gamma)");
}

void emitSpectrum(const Spectrum& s, const fs::path& dir, const std::string& stem,
                  const std::set<std::string>& formats, const std::string& note) {
  if (formats.count("csv")) {
    writeSpectrumCsv(s, dir / (stem + ".csv"), note);
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << "\n";
  }
  if (formats.count("json")) {
    writeSpectrumJson(s, dir / (stem + ".json"), note);
    std::cout << "wrote " << (dir / (stem + ".json")).string() << "\n";
  }
  if (formats.count("svg")) {
    writeSpectrumSvg(s, dir / (stem + ".svg"), stem + " (" + evaluatorTag(s.evaluator) + ")");
    std::cout << "wrote " << (dir / (stem + ".svg")).string() << "\n";
  }
}

void emitScan(const ScanGrid2D& g, const fs::path& dir, const std::string& stem,
              const std::set<std::string>& formats, const std::string& note) {
  if (formats.count("csv")) {
    writeScanCsv(g, dir / (stem + ".csv"), note);
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << "\n";
  }
  if (formats.count("json")) {
    writeScanJson(g, dir / (stem + ".json"), note);
    std::cout << "wrote " << (dir / (stem + ".json")).string() << "\n";
  }
  if (formats.count("svg")) {
    writeScanSvg(g, dir / (stem + ".svg"), stem + " (" + evaluatorTag(g.evaluator) + ")");
    std::cout << "wrote " << (dir / (stem + ".svg")).string() << "\n";
  }
}

std::string panelStem(const FigurePreset& f, double value) {
  std::string axis = f.panelAxis == "g_c" ? "gc" : f.panelAxis;
  return f.name + "_" + axis + "_" + fmtg(value);
}

void runReproduceOne(const std::string& figure, const fs::path& dir,
                     const std::set<std::string>& formats) {
  const FigurePreset f = presetFor(figure);
  if (!f.panelValues.empty()) {
    for (double v : f.panelValues) {
      const Params p = applyPanelValue(f, v);
      const Spectrum s = sweepDeltaC(f.evaluator, p, f.deltaCMin, f.deltaCMax, f.deltaCN, f.model);
      emitSpectrum(s, dir, panelStem(f, v), formats, f.note);
    }
  } else {
    const ScanGrid2D g = scan2D(f.evaluator, f.base, f.scanAxis, f.scanMin, f.scanMax,
                                f.scanAxisN, f.deltaCMin, f.deltaCMax, f.deltaCN, f.model);
    emitScan(g, dir, f.name, formats, f.note);
  }
}

int runSpectrum(const Options& o) {
  validateParams(o.params);
  const auto formats = parseFormats(o.formats);
  const auto dir = ensureOutDir(o.out);
  const Spectrum s = sweepDeltaC(evaluatorFromTag(o.evaluator), o.params, o.deltaCMin,
                                 o.deltaCMax, o.points, groundRelaxationFromTag(o.model));
  emitSpectrum(s, dir, "spectrum", formats, "");
  if (o.windows) {
    const WindowReport report = analyzeWindows(s);
    writeWindowReportJson(report, dir / "windows.json");
    std::cout << "wrote " << (dir / "windows.json").string() << "\n";
    std::cout << "regime: " << regimeName(report.regime) << "\n";
    for (const auto& w : report.windows)
      std::cout << "window: center=" << fmtg(w.center) << " width=" << fmtg(w.width)
                << " floor=" << fmtg(w.floorAbsorption) << "\n";
    if (report.eiaValue) std::cout << "eia absorption: " << fmtg(*report.eiaValue) << "\n";
    if (!report.diagnostic.empty()) std::cout << "note: " << report.diagnostic << "\n";
  }
  return 0;
}

int runScan(const Options& o) {
  validateParams(o.params);
  const auto formats = parseFormats(o.formats);
  const auto dir = ensureOutDir(o.out);
  const ScanGrid2D g =
      scan2D(evaluatorFromTag(o.evaluator), o.params, scanAxisFromName(o.axis), o.axisMin,
             o.axisMax, o.axisPoints, o.deltaCMin, o.deltaCMax, o.points,
             groundRelaxationFromTag(o.model));
  emitScan(g, dir, "scan", formats, "");
  return 0;
}

int runEigen(const Options& o) {
  validateParams(o.params);
  const bool tripodSystem = o.system == "tripod";
  if (!tripodSystem && o.system != "lambda")
    throw ValidationError("unknown system \"" + o.system + "\" (expected tripod or lambda)");

  const ComplexMatrix H = tripodSystem ? buildTripodH(o.params) : buildLambdaH(o.params);
  const EigenSystem es = eigensystem(H, true);
  const auto dark = findDarkStates(es, o.tol);

  std::cout << "Hamiltonian (rotating frame, units of gamma):\n" << formatMatrix(H);
  std::cout << "eigenvalues:";
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    std::cout << " " << fmtg(es.values(k).real());
  std::cout << "\neigenvectors (columns):\n" << formatMatrix(es.vectors);
  std::cout << "dark states at tol=" << fmtg(o.tol) << ": " << dark.size() << "\n";
  for (const auto& d : dark) {
    std::cout << "  eigenvalue=" << fmtg(d.eigenvalue.real())
              << "  |<1|v>|=" << fmtg(d.excitedAmplitude)
              << "  |<3|v>|=" << fmtg(d.couplingAmplitude) << "  v=[";
    for (Eigen::Index k = 0; k < d.vector.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << fmtg(d.vector(k).real());
      if (std::abs(d.vector(k).imag()) > 1e-12) std::cout << fmtg(d.vector(k).imag()) << "j";
    }
    std::cout << "]\n";
  }

  nlohmann::json j;
  if (tripodSystem) {
    const auto roots = closedFormCubicRoots(o.params);
    std::cout << "closed-form cubic roots:";
    for (const auto& r : roots) {
      std::cout << " " << fmtg(r.real());
      if (std::abs(r.imag()) > 1e-12) std::cout << (r.imag() > 0 ? "+" : "") << fmtg(r.imag()) << "j";
    }
    std::cout << "\n";
    if (o.params.g_p > 0.0 && o.params.g_c > 0.0) {
      for (const auto& r : roots) {
        if (std::abs(r.imag()) > 1e-10) continue;
        const auto cf = closedFormEigenvector(r.real(), o.params);
        std::cout << "closed-form eigenvector at lambda=" << fmtg(r.real())
                  << ": residual rotating-frame=" << fmtg(cf.residualRotatingFrame)
                  << ", symmetric-frame=" << fmtg(cf.residualSymmetricFrame) << "\n";
        j["closed_form"].push_back(
            {{"lambda", r.real()},
             {"residual_rotating_frame", cf.residualRotatingFrame},
             {"residual_symmetric_frame", cf.residualSymmetricFrame}});
      }
    }
  }

  const auto formats = parseFormats(o.formats);
  if (formats.count("json")) {
    const auto dir = ensureOutDir(o.out);
    j["version"] = kVersionTag;
    j["system"] = o.system;
    j["params"] = nlohmann::json::parse(paramsToJson(o.params));
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
      nlohmann::json vec = nlohmann::json::array();
      for (Eigen::Index rIdx = 0; rIdx < es.vectors.rows(); ++rIdx)
        vec.push_back({{"re", es.vectors(rIdx, k).real()}, {"im", es.vectors(rIdx, k).imag()}});
      j["eigenpairs"].push_back({{"value", es.values(k).real()}, {"vector", vec}});
    }
    j["dark_state_tol"] = o.tol;
    j["dark_states"] = nlohmann::json::array();
    for (const auto& d : dark)
      j["dark_states"].push_back({{"eigenvalue", d.eigenvalue.real()},
                                  {"excited_amplitude", d.excitedAmplitude},
                                  {"coupling_amplitude", d.couplingAmplitude}});
    std::ofstream outFile(dir / "eigen.json", std::ios::binary);
    if (!outFile) throw NumericalError("cannot open " + (dir / "eigen.json").string() + " for writing");
    outFile << j.dump(2) << "\n";
    std::cout << "wrote " << (dir / "eigen.json").string() << "\n";
  }
  return 0;
}

int runCompare(const Options& o) {
  validateParams(o.params);
  const auto model = groundRelaxationFromTag(o.model);
  const Spectrum num = sweepDeltaC(Evaluator::NumericTripod, o.params, o.deltaCMin, o.deltaCMax,
                                   o.points, model);

  struct Row {
    std::string pair;
    double supIm = 0.0, atIm = 0.0, supH = 0.0, atH = 0.0;
  };
  auto deviation = [&](Evaluator e, const std::string& label) {
    const Spectrum ana = sweepDeltaC(e, o.params, o.deltaCMin, o.deltaCMax, o.points, model);
    Row row;
    row.pair = "numeric-tripod vs " + label;
    for (std::size_t i = 0; i < num.deltaC.size(); ++i) {
      const double dIm = std::abs(num.h[i].imag() - ana.h[i].imag());
      const double dH = std::abs(num.h[i] - ana.h[i]);
      if (dIm > row.supIm) { row.supIm = dIm; row.atIm = num.deltaC[i]; }
      if (dH > row.supH) { row.supH = dH; row.atH = num.deltaC[i]; }
    }
    return row;
  };

  std::printf("%-42s %12s %12s %12s %12s\n", "pair", "sup|dIm|", "at delta_c", "sup|dh|",
              "at delta_c");
  for (const Row& row : {deviation(Evaluator::AnalyticFull, "analytic-full"),
                         deviation(Evaluator::AnalyticTwoLambda, "analytic-two-lambda")}) {
    std::printf("%-42s %12.4e %12g %12.4e %12g\n", row.pair.c_str(), row.supIm, row.atIm,
                row.supH, row.atH);
  }
  return 0;  // a measurement, not a test
}

int runBfield(const Options& o) {
  const double gauss = bfieldForSplitting({o.splittingMHz, o.landeG});
  std::printf("B = %.6g gauss (splitting %.6g MHz, lande_g %.6g)\n", gauss, o.splittingMHz,
              o.landeG);
  return 0;
}

int runReproduce(const Options& o) {
  if (o.figure.empty()) throw ValidationError("reproduce requires --figure");
  const auto formats = parseFormats(o.formats);
  const auto dir = ensureOutDir(o.out);
  if (o.figure == "all") {
    for (const auto& name : figureNames()) runReproduceOne(name, dir, formats);
  } else {
    runReproduceOne(o.figure, dir, formats);
  }
  return 0;
}

}  // namespace

int runCommand(const std::vector<std::string>& args) {
  Options o;
  const std::string defaultFormats = o.formats;

  // Config file first, so explicit flags override its values.
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    else continue;
    try {
      loadConfig(path, o);
    } catch (const std::exception& e) {
      std::cerr << "error: config file " << path << ": " << e.what() << "\n";
      return 2;
    }
  }
  const bool formatsConfigured = o.formats != defaultFormats;

  CLI::App app{"tripod-eit: absorption and dispersion of a tripod four-level atom"};
  app.require_subcommand(1);
  std::string configPath;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--config", configPath, "JSON config file (flags override it)");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--format", o.formats, "comma-separated formats: csv,json,svg");
    cmd->add_option("--model", o.model, "ground relaxation model: exchange|dephasing");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "1D detuning sweep of one evaluator");
  addParamFlags(spectrum, o);
  addCommon(spectrum);
  spectrum->add_option("--evaluator", o.evaluator,
                       "analytic-full|analytic-two-lambda|numeric-tripod|"
                       "analytic-lambda-exact|numeric-lambda");
  spectrum->add_option("--deltac-min", o.deltaCMin, "sweep start");
  spectrum->add_option("--deltac-max", o.deltaCMax, "sweep end");
  spectrum->add_option("--points", o.points, "number of sweep points");
  spectrum->add_flag("--windows", o.windows, "also extract transparency windows");

  CLI::App* scan = app.add_subcommand("scan", "2D absorption map over (axis x delta_c)");
  addParamFlags(scan, o);
  addCommon(scan);
  scan->add_option("--evaluator", o.evaluator, "response evaluator");
  scan->add_option("--axis", o.axis, "scan axis: g_c|Delta|alpha");
  scan->add_option("--axis-min", o.axisMin, "axis start");
  scan->add_option("--axis-max", o.axisMax, "axis end");
  scan->add_option("--axis-points", o.axisPoints, "number of axis rows");
  scan->add_option("--deltac-min", o.deltaCMin, "sweep start");
  scan->add_option("--deltac-max", o.deltaCMax, "sweep end");
  scan->add_option("--points", o.points, "number of sweep points");

  CLI::App* eigen = app.add_subcommand("eigen", "eigensystem and dark-state report");
  addParamFlags(eigen, o);
  addCommon(eigen);
  eigen->add_option("--deltac", o.params.delta_c, "probe-coupling detuning");
  eigen->add_option("--system", o.system, "tripod|lambda");
  eigen->add_option("--tol", o.tol, "dark-state amplitude tolerance");

  CLI::App* compare = app.add_subcommand("compare", "numeric vs analytic deviation table");
  addParamFlags(compare, o);
  addCommon(compare);
  compare->add_option("--deltac-min", o.deltaCMin, "sweep start");
  compare->add_option("--deltac-max", o.deltaCMax, "sweep end");
  compare->add_option("--points", o.points, "number of sweep points");

  CLI::App* bfield = app.add_subcommand("bfield", "magnetic field for a Zeeman splitting");
  bfield->add_option("--config", configPath, "JSON config file (flags override it)");
  bfield->add_option("--splitting-mhz", o.splittingMHz, "Zeeman splitting in MHz")->required();
  bfield->add_option("--lande-g", o.landeG, "Lande g factor");

  CLI::App* reproduce = app.add_subcommand("reproduce", "emit a built-in figure preset");
  addCommon(reproduce);
  reproduce->add_option("--figure", o.figure, "fig2|fig5|fig6|fig7|fig8|all");

  std::vector<const char*> argv;
  argv.push_back("tripod-eit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(spectrum)) return runSpectrum(o);
    if (app.got_subcommand(scan)) return runScan(o);
    if (app.got_subcommand(eigen)) return runEigen(o);
    if (app.got_subcommand(compare)) return runCompare(o);
    if (app.got_subcommand(bfield)) return runBfield(o);
    if (app.got_subcommand(reproduce)) {
      // reproduce emits plots by default; an explicit --format (or config) wins
      if (reproduce->count("--format") == 0 && !formatsConfigured) o.formats = "csv,svg";
      return runReproduce(o);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace tripod
