#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tripod/cli.hpp"
#include "tripod/io.hpp"

using namespace tripod;
using tripod::testing::contains;

namespace {

namespace fs = std::filesystem;

fs::path scratchDir(const std::string& leaf) {
  const fs::path dir = fs::temp_directory_path() / "tripod-cli-tests" / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int countDataRows(const fs::path& csv) {
  std::istringstream lines(slurp(csv));
  std::string line;
  int rows = 0;
  bool pastHeader = false;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!pastHeader) {
      pastHeader = true;  // column header
      continue;
    }
    ++rows;
  }
  return rows;
}

}  // namespace

TEST_CASE("spectrum emits a 601-row CSV by default") {
  const auto dir = scratchDir("spectrum");
  const int rc = runCommand({"spectrum", "--gc", "5", "--delta", "5", "--alpha", "0.001",
                             "--beta", "0.666", "--evaluator", "analytic-full", "--out",
                             dir.string()});
  CHECK(rc == 0);
  REQUIRE(fs::exists(dir / "spectrum.csv"));
  CHECK(countDataRows(dir / "spectrum.csv") == 601);
}

TEST_CASE("invalid parameters exit with status 2") {
  const auto dir = scratchDir("invalid");
  CHECK(runCommand({"spectrum", "--gc", "-1", "--out", dir.string()}) == 2);
  CHECK(runCommand({"spectrum", "--evaluator", "nope", "--out", dir.string()}) == 2);
  CHECK(runCommand({"nonsense"}) == 2);
  CHECK(runCommand({}) == 2);
  CHECK(runCommand({"reproduce", "--figure", "fig9", "--out", dir.string()}) == 2);
  CHECK(runCommand({"spectrum", "--format", "bmp", "--out", dir.string()}) == 2);
}

TEST_CASE("numerical failure exits with status 3") {
  const auto dir = scratchDir("degenerate");
  // at Delta = 0 without ground relaxation the antisymmetric ground state is
  // dark and stationary, so the steady state is not unique
  const int rc = runCommand({"spectrum", "--evaluator", "numeric-tripod", "--alpha", "0",
                             "--delta", "0", "--gp", "0.001", "--deltac-min", "-1",
                             "--deltac-max", "1", "--points", "3", "--out", dir.string()});
  CHECK(rc == 3);
}

TEST_CASE("reproduce fig7 writes four spectra with plots") {
  const auto dir = scratchDir("fig7");
  CHECK(runCommand({"reproduce", "--figure", "fig7", "--out", dir.string()}) == 0);
  for (const char* leaf : {"fig7_Delta_0", "fig7_Delta_2.5", "fig7_Delta_5", "fig7_Delta_7.5"}) {
    CHECK(fs::exists(dir / (std::string(leaf) + ".csv")));
    CHECK(fs::exists(dir / (std::string(leaf) + ".svg")));
  }
}

TEST_CASE("reproduce honors an explicit format list") {
  const auto dir = scratchDir("formats");
  CHECK(runCommand({"reproduce", "--figure", "fig8", "--format", "json", "--out", dir.string()}) ==
        0);
  CHECK(fs::exists(dir / "fig8_alpha_0.001.json"));
  CHECK(!fs::exists(dir / "fig8_alpha_0.001.csv"));
}

TEST_CASE("scan emits the long-format CSV") {
  const auto dir = scratchDir("scan");
  CHECK(runCommand({"scan", "--axis", "Delta", "--axis-min", "0", "--axis-max", "4",
                    "--axis-points", "3", "--points", "21", "--gc", "2", "--evaluator",
                    "analytic-two-lambda", "--out", dir.string()}) == 0);
  REQUIRE(fs::exists(dir / "scan.csv"));
  CHECK(countDataRows(dir / "scan.csv") == 3 * 21);
}

TEST_CASE("identical invocations produce identical artifacts") {
  const auto dirA = scratchDir("det-a");
  const auto dirB = scratchDir("det-b");
  const std::vector<std::string> base = {"spectrum", "--gc", "2",    "--delta", "5",
                                         "--points", "41", "--format", "csv,svg,json"};
  auto withOut = [&](const fs::path& d) {
    auto v = base;
    v.push_back("--out");
    v.push_back(d.string());
    return v;
  };
  CHECK(runCommand(withOut(dirA)) == 0);
  CHECK(runCommand(withOut(dirB)) == 0);
  for (const char* leaf : {"spectrum.csv", "spectrum.svg", "spectrum.json"})
    CHECK(slurp(dirA / leaf) == slurp(dirB / leaf));
}

TEST_CASE("config files seed options and flags override them") {
  const auto dir = scratchDir("config");
  {
    std::ofstream cfg(dir / "run.json");
    cfg << R"({
      "params": {"g_p": 0.01, "g_c": 3.0, "delta_c": 0.0, "Delta": 4.0, "alpha": 0.001, "beta": 0.666},
      "evaluator": "analytic-two-lambda",
      "sweep": {"deltac_min": -5, "deltac_max": 5, "points": 11},
      "formats": ["csv"]
    })";
  }
  CHECK(runCommand({"spectrum", "--config", (dir / "run.json").string(), "--gc", "4", "--out",
                    dir.string()}) == 0);
  const Spectrum s = readSpectrumCsv(dir / "spectrum.csv");
  CHECK(s.params.g_c == 4.0);    // flag wins
  CHECK(s.params.Delta == 4.0);  // config value
  CHECK(s.evaluator == Evaluator::AnalyticTwoLambda);
  CHECK(s.deltaC.size() == 11);
  CHECK(runCommand({"spectrum", "--config", (dir / "missing.json").string()}) == 2);
}

TEST_CASE("windows flag emits the window report") {
  const auto dir = scratchDir("windows");
  CHECK(runCommand({"spectrum", "--gc", "2", "--delta", "5", "--evaluator",
                    "analytic-two-lambda", "--windows", "--out", dir.string()}) == 0);
  REQUIRE(fs::exists(dir / "windows.json"));
  CHECK(contains(slurp(dir / "windows.json"), "\"separated\""));
}

TEST_CASE("eigen and compare and bfield run cleanly") {
  const auto dir = scratchDir("misc");
  CHECK(runCommand({"eigen", "--gp", "1", "--gc", "2", "--deltac", "5", "--delta", "5",
                    "--format", "json", "--out", dir.string()}) == 0);
  CHECK(fs::exists(dir / "eigen.json"));
  CHECK(runCommand({"eigen", "--system", "lambda", "--format", "csv"}) == 0);
  CHECK(runCommand({"compare", "--gc", "2.5", "--delta", "5", "--gp", "0.001", "--alpha",
                    "0.0001", "--points", "41"}) == 0);
  CHECK(runCommand({"bfield", "--splitting-mhz", "10"}) == 0);
  CHECK(runCommand({"bfield", "--splitting-mhz", "-1"}) == 2);
  CHECK(runCommand({"bfield"}) == 2);  // splitting is required
}

TEST_CASE("help exits cleanly") {
  CHECK(runCommand({"--help"}) == 0);
  CHECK(runCommand({"spectrum", "--help"}) == 0);
}

TEST_CASE("malformed config values are rejected, not fatal") {
  const auto dir = scratchDir("badconfig");
  {
    std::ofstream cfg(dir / "bad.json");
    cfg << R"({"out": 5})";
  }
  CHECK(runCommand({"spectrum", "--config", (dir / "bad.json").string()}) == 2);
  {
    std::ofstream cfg(dir / "notjson.json");
    cfg << "{{{";
  }
  CHECK(runCommand({"spectrum", "--config", (dir / "notjson.json").string()}) == 2);
}
