// io.hpp — CSV/JSON/SVG emission for spectra, scans and window reports.
// Output is deterministic: identical inputs produce identical bytes.
#pragma once

#include <filesystem>
#include <string>

#include "tripod/spectra.hpp"

namespace tripod {

// Spectrum CSV: '#' metadata lines (version tag, evaluator, model, params
// JSON, optional note), then header "delta_c,re_h,im_h" and one row per
// point, 17 significant digits.
void writeSpectrumCsv(const Spectrum& s, const std::filesystem::path& path,
                      const std::string& note = "");

// Parses a CSV written by writeSpectrumCsv back into a Spectrum.
Spectrum readSpectrumCsv(const std::filesystem::path& path);

// 2D scan CSV: long format "axis_value,delta_c,im_h" with the same metadata.
void writeScanCsv(const ScanGrid2D& g, const std::filesystem::path& path,
                  const std::string& note = "");

void writeSpectrumJson(const Spectrum& s, const std::filesystem::path& path,
                       const std::string& note = "");
void writeScanJson(const ScanGrid2D& g, const std::filesystem::path& path,
                   const std::string& note = "");
void writeWindowReportJson(const WindowReport& r, const std::filesystem::path& path);
std::string windowReportToJson(const WindowReport& r);

// Line plot with the dispersion Re(h) in blue and the absorption Im(h) in red.
void writeSpectrumSvg(const Spectrum& s, const std::filesystem::path& path,
                      const std::string& title = "");

// Heatmap of Im(h): one rectangle per grid cell, colored by a linear ramp
// from #000000 at 0 to #ffc800 at the grid maximum, with a color bar.
void writeScanSvg(const ScanGrid2D& g, const std::filesystem::path& path,
                  const std::string& title = "");

// %.17g formatting used by the CSV writers (exact double round-trip).
std::string formatDouble(double v);

}  // namespace tripod
