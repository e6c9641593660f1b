#include "tripod/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tripod/version.hpp"

namespace tripod {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void writeFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericalError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw NumericalError("write failed for " + path.string());
}

std::string metadataHeader(const Params& p, Evaluator e, GroundRelaxation model,
                           const std::string& note) {
  std::string head;
  head += std::string("# ") + kVersionTag + "\n";
  head += "# evaluator: " + evaluatorTag(e) + "\n";
  head += "# model: " + groundRelaxationTag(model) + "\n";
  head += "# params: " + paramsToJson(p) + "\n";
  if (!note.empty()) head += "# note: " + note + "\n";
  return head;
}

// Tick positions at a readable step covering [lo, hi].
std::vector<double> ticks(double lo, double hi, int target) {
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  const double rawStep = span / std::max(1, target);
  const double mag = std::pow(10.0, std::floor(std::log10(rawStep)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= rawStep) {
      step = mag * m;
      break;
    }
  }
  std::vector<double> out;
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + 1e-12 * span; t += step) out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
  return out;
}

struct PlotBox {
  double x0 = 70, y0 = 30, w = 660, h = 400;  // data area in a 800x500 canvas
};

}  // namespace

std::string formatDouble(double v) { return fmt("%.17g", v); }

void writeSpectrumCsv(const Spectrum& s, const std::filesystem::path& path,
                      const std::string& note) {
  std::string out = metadataHeader(s.params, s.evaluator, s.model, note);
  out += "delta_c,re_h,im_h\n";
  for (std::size_t i = 0; i < s.deltaC.size(); ++i) {
    out += formatDouble(s.deltaC[i]) + "," + formatDouble(s.h[i].real()) + "," +
           formatDouble(s.h[i].imag()) + "\n";
  }
  writeFile(path, out);
}

Spectrum readSpectrumCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NumericalError("cannot open " + path.string() + " for reading");
  Spectrum s;
  bool sawHeader = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto tag = [&](const std::string& key) -> std::string {
        const std::string prefix = "# " + key + ": ";
        return line.rfind(prefix, 0) == 0 ? line.substr(prefix.size()) : std::string();
      };
      if (auto v = tag("evaluator"); !v.empty()) s.evaluator = evaluatorFromTag(v);
      if (auto v = tag("model"); !v.empty()) s.model = groundRelaxationFromTag(v);
      if (auto v = tag("params"); !v.empty()) s.params = paramsFromJson(v);
      continue;
    }
    if (!sawHeader) {
      if (line != "delta_c,re_h,im_h")
        throw ValidationError("unexpected CSV header in " + path.string() + ": " + line);
      sawHeader = true;
      continue;
    }
    double dc = 0, re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &dc, &re, &im) != 3)
      throw ValidationError("unparseable CSV row in " + path.string() + ": " + line);
    s.deltaC.push_back(dc);
    s.h.emplace_back(re, im);
  }
  if (s.deltaC.size() < 2) throw ValidationError("spectrum CSV has fewer than 2 rows");
  return s;
}

void writeScanCsv(const ScanGrid2D& g, const std::filesystem::path& path,
                  const std::string& note) {
  std::string out = metadataHeader(g.base, g.evaluator, g.model, note);
  out += "# axis: " + scanAxisName(g.axis) + "\n";
  out += "axis_value,delta_c,im_h\n";
  for (Eigen::Index r = 0; r < g.absorption.rows(); ++r) {
    const std::string axisVal = formatDouble(g.axisValues[static_cast<std::size_t>(r)]);
    for (Eigen::Index c = 0; c < g.absorption.cols(); ++c) {
      out += axisVal + "," + formatDouble(g.deltaC[static_cast<std::size_t>(c)]) + "," +
             formatDouble(g.absorption(r, c)) + "\n";
    }
  }
  writeFile(path, out);
}

namespace {

nlohmann::json paramsJsonObject(const Params& p) {
  return nlohmann::json::parse(paramsToJson(p));
}

}  // namespace

void writeSpectrumJson(const Spectrum& s, const std::filesystem::path& path,
                       const std::string& note) {
  nlohmann::json j;
  j["version"] = kVersionTag;
  j["evaluator"] = evaluatorTag(s.evaluator);
  j["model"] = groundRelaxationTag(s.model);
  j["params"] = paramsJsonObject(s.params);
  if (!note.empty()) j["note"] = note;
  auto& points = j["points"];
  points = nlohmann::json::array();
  for (std::size_t i = 0; i < s.deltaC.size(); ++i) {
    points.push_back({{"delta_c", s.deltaC[i]}, {"re_h", s.h[i].real()}, {"im_h", s.h[i].imag()}});
  }
  writeFile(path, j.dump(2) + "\n");
}

void writeScanJson(const ScanGrid2D& g, const std::filesystem::path& path,
                   const std::string& note) {
  nlohmann::json j;
  j["version"] = kVersionTag;
  j["evaluator"] = evaluatorTag(g.evaluator);
  j["model"] = groundRelaxationTag(g.model);
  j["params"] = paramsJsonObject(g.base);
  j["axis"] = scanAxisName(g.axis);
  if (!note.empty()) j["note"] = note;
  j["axis_values"] = g.axisValues;
  j["delta_c"] = g.deltaC;
  auto& rows = j["absorption"];
  rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < g.absorption.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < g.absorption.cols(); ++c) row.push_back(g.absorption(r, c));
    rows.push_back(std::move(row));
  }
  writeFile(path, j.dump(2) + "\n");
}

std::string windowReportToJson(const WindowReport& r) {
  nlohmann::json j;
  j["regime"] = regimeName(r.regime);
  auto& windows = j["windows"];
  windows = nlohmann::json::array();
  for (const auto& w : r.windows)
    windows.push_back({{"center", w.center}, {"width", w.width},
                       {"floor_absorption", w.floorAbsorption}});
  auto& peaks = j["peaks"];
  peaks = nlohmann::json::array();
  for (const auto& p : r.peaks) peaks.push_back({{"delta_c", p.delta_c}, {"im_h", p.imH}});
  if (r.eiaValue) j["eia_value"] = *r.eiaValue;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j.dump(2) + "\n";
}

void writeWindowReportJson(const WindowReport& r, const std::filesystem::path& path) {
  writeFile(path, windowReportToJson(r));
}

void writeSpectrumSvg(const Spectrum& s, const std::filesystem::path& path,
                      const std::string& title) {
  const PlotBox box;
  const double xLo = s.deltaC.front(), xHi = s.deltaC.back();
  double yLo = 0.0, yHi = 0.0;
  for (const auto& h : s.h) {
    yLo = std::min({yLo, h.real(), h.imag()});
    yHi = std::max({yHi, h.real(), h.imag()});
  }
  if (yHi == yLo) yHi = yLo + 1.0;
  const double pad = 0.05 * (yHi - yLo);
  yLo -= pad;
  yHi += pad;

  auto px = [&](double x) { return box.x0 + (x - xLo) / (xHi - xLo) * box.w; };
  auto py = [&](double y) { return box.y0 + (yHi - y) / (yHi - yLo) * box.h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << box.x0 << "\" y=\"" << box.y0 << "\" width=\"" << box.w
      << "\" height=\"" << box.h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : ticks(xLo, xHi, 8)) {
    svg << "<line x1=\"" << fmt("%.2f", px(t)) << "\" y1=\"" << fmt("%.2f", box.y0 + box.h)
        << "\" x2=\"" << fmt("%.2f", px(t)) << "\" y2=\"" << fmt("%.2f", box.y0 + box.h + 6)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt("%.2f", px(t)) << "\" y=\"" << fmt("%.2f", box.y0 + box.h + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
  }
  for (double t : ticks(yLo, yHi, 8)) {
    svg << "<line x1=\"" << fmt("%.2f", box.x0 - 6) << "\" y1=\"" << fmt("%.2f", py(t))
        << "\" x2=\"" << fmt("%.2f", box.x0) << "\" y2=\"" << fmt("%.2f", py(t))
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt("%.2f", box.x0 - 10) << "\" y=\"" << fmt("%.2f", py(t) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt("%g", t) << "</text>\n";
  }
  if (yLo < 0.0 && yHi > 0.0) {
    svg << "<line x1=\"" << box.x0 << "\" y1=\"" << fmt("%.2f", py(0.0)) << "\" x2=\""
        << box.x0 + box.w << "\" y2=\"" << fmt("%.2f", py(0.0))
        << "\" stroke=\"#cccccc\"/>\n";
  }

  auto polyline = [&](auto value, const char* color) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.deltaC.size(); ++i) {
      if (i) svg << ' ';
      svg << fmt("%.2f", px(s.deltaC[i])) << ',' << fmt("%.2f", py(value(s.h[i])));
    }
    svg << "\"/>\n";
  };
  polyline([](const Complex& h) { return h.real(); }, "#1f4fd0");  // dispersion
  polyline([](const Complex& h) { return h.imag(); }, "#d02020");  // absorption

  svg << "<text x=\"" << box.x0 + box.w / 2 << "\" y=\"" << box.y0 + box.h + 42
      << "\" font-size=\"14\" text-anchor=\"middle\">delta_c (units of gamma)</text>\n";
  svg << "<text x=\"" << box.x0 + 10 << "\" y=\"" << box.y0 + 18
      << "\" font-size=\"13\" fill=\"#1f4fd0\">Re h (dispersion)</text>\n";
  svg << "<text x=\"" << box.x0 + 10 << "\" y=\"" << box.y0 + 34
      << "\" font-size=\"13\" fill=\"#d02020\">Im h (absorption)</text>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << box.x0 + box.w / 2 << "\" y=\"18\" font-size=\"14\" "
        << "text-anchor=\"middle\">" << title << "</text>\n";
  }
  svg << "</svg>\n";
  writeFile(path, svg.str());
}

void writeScanSvg(const ScanGrid2D& g, const std::filesystem::path& path,
                  const std::string& title) {
  const PlotBox box;
  const auto rows = g.absorption.rows();
  const auto cols = g.absorption.cols();
  const double vMax = std::max(g.absorption.maxCoeff(), 1e-300);

  // Linear ramp #000000 (0) -> #ffc800 (vMax).
  auto color = [&](double v) {
    const double t = std::clamp(v / vMax, 0.0, 1.0);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(std::lround(255 * t)),
                  static_cast<int>(std::lround(200 * t)), 0);
    return std::string(buf);
  };

  const double cw = box.w / static_cast<double>(cols);
  const double ch = box.h / static_cast<double>(rows);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  for (Eigen::Index r = 0; r < rows; ++r) {
    // Row 0 (smallest axis value) is drawn at the bottom.
    const double y = box.y0 + box.h - static_cast<double>(r + 1) * ch;
    for (Eigen::Index c = 0; c < cols; ++c) {
      svg << "<rect x=\"" << fmt("%.2f", box.x0 + static_cast<double>(c) * cw) << "\" y=\""
          << fmt("%.2f", y) << "\" width=\"" << fmt("%.3f", cw + 0.05) << "\" height=\""
          << fmt("%.3f", ch + 0.05) << "\" fill=\"" << color(g.absorption(r, c)) << "\"/>\n";
    }
  }
  svg << "<rect x=\"" << box.x0 << "\" y=\"" << box.y0 << "\" width=\"" << box.w
      << "\" height=\"" << box.h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : ticks(g.deltaC.front(), g.deltaC.back(), 8)) {
    const double x = box.x0 + (t - g.deltaC.front()) / (g.deltaC.back() - g.deltaC.front()) * box.w;
    svg << "<text x=\"" << fmt("%.2f", x) << "\" y=\"" << fmt("%.2f", box.y0 + box.h + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
  }
  for (double t : ticks(g.axisValues.front(), g.axisValues.back(), 6)) {
    const double y = box.y0 + box.h -
                     (t - g.axisValues.front()) /
                         (g.axisValues.back() - g.axisValues.front()) * box.h;
    svg << "<text x=\"" << fmt("%.2f", box.x0 - 8) << "\" y=\"" << fmt("%.2f", y + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt("%g", t) << "</text>\n";
  }

  // Color bar.
  const double barX = box.x0 + box.w + 16, barW = 16;
  const int barSteps = 64;
  for (int i = 0; i < barSteps; ++i) {
    const double v = vMax * (static_cast<double>(i) + 0.5) / barSteps;
    const double y = box.y0 + box.h * (1.0 - static_cast<double>(i + 1) / barSteps);
    svg << "<rect x=\"" << barX << "\" y=\"" << fmt("%.2f", y) << "\" width=\"" << barW
        << "\" height=\"" << fmt("%.3f", box.h / barSteps + 0.05) << "\" fill=\"" << color(v)
        << "\"/>\n";
  }
  svg << "<text x=\"" << barX + barW + 4 << "\" y=\"" << box.y0 + 10
      << "\" font-size=\"11\">" << fmt("%.3g", vMax) << "</text>\n";
  svg << "<text x=\"" << barX + barW + 4 << "\" y=\"" << box.y0 + box.h
      << "\" font-size=\"11\">0</text>\n";

  svg << "<text x=\"" << box.x0 + box.w / 2 << "\" y=\"" << box.y0 + box.h + 38
      << "\" font-size=\"14\" text-anchor=\"middle\">delta_c (units of gamma)</text>\n";
  svg << "<text x=\"16\" y=\"" << box.y0 + box.h / 2
      << "\" font-size=\"14\" transform=\"rotate(-90 16 " << box.y0 + box.h / 2 << ")\" "
      << "text-anchor=\"middle\">" << scanAxisName(g.axis) << "</text>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << box.x0 + box.w / 2 << "\" y=\"18\" font-size=\"14\" "
        << "text-anchor=\"middle\">" << title << "</text>\n";
  }
  svg << "</svg>\n";
  writeFile(path, svg.str());
}

}  // namespace tripod
