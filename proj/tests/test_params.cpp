#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "tripod/params.hpp"
#include "tripod/presets.hpp"

using namespace tripod;
using tripod::testing::contains;
using tripod::testing::thrownMessage;

TEST_CASE("stock parameter set validates") {
  Params p;
  p.g_p = 0.01;
  p.g_c = 5.0;
  p.Delta = 5.0;
  p.delta_c = 0.0;
  p.alpha = 0.001;
  p.beta = 0.666;
  CHECK(validateParams(p) == p);
}

TEST_CASE("validation is idempotent") {
  Params p;
  p.g_p = 0.3;
  p.delta_c = -2.5;
  const Params once = validateParams(p);
  CHECK(validateParams(once) == once);
}

TEST_CASE("zero beta is rejected by name") {
  Params p;
  p.beta = 0.0;
  const auto msg = thrownMessage<ValidationError>([&] { validateParams(p); });
  CHECK(contains(msg, "beta must be positive"));
}

TEST_CASE("negative probe strength is rejected by name") {
  Params p;
  p.g_p = -1.0;
  const auto msg = thrownMessage<ValidationError>([&] { validateParams(p); });
  CHECK(contains(msg, "g_p must be nonnegative"));
}

TEST_CASE("every violated field is reported") {
  Params p;
  p.g_p = -1.0;
  p.beta = 0.0;
  p.alpha = std::nan("");
  const auto msg = thrownMessage<ValidationError>([&] { validateParams(p); });
  CHECK(contains(msg, "g_p must be nonnegative"));
  CHECK(contains(msg, "beta must be positive"));
  CHECK(contains(msg, "alpha must be finite"));
}

TEST_CASE("non-finite detuning is rejected") {
  Params p;
  p.delta_c = std::numeric_limits<double>::infinity();
  const auto msg = thrownMessage<ValidationError>([&] { validateParams(p); });
  CHECK(contains(msg, "delta_c must be finite"));
}

TEST_CASE("params JSON round-trips exactly with the agreed field names") {
  Params p;
  p.g_p = 0.017;
  p.g_c = 4.25;
  p.delta_c = -3.125;
  p.Delta = 7.5;
  p.alpha = 1e-4;
  p.beta = 2.0 / 3.0;
  const std::string text = paramsToJson(p);
  for (const char* name : {"\"g_p\"", "\"g_c\"", "\"delta_c\"", "\"Delta\"", "\"alpha\"", "\"beta\""})
    CHECK(contains(text, name));
  CHECK(paramsFromJson(text) == p);
}

TEST_CASE("params JSON rejects missing, unknown and non-numeric fields") {
  CHECK(contains(thrownMessage<ValidationError>([] {
          paramsFromJson(R"({"g_p":1,"g_c":1,"delta_c":0,"Delta":0,"alpha":0})");
        }),
        "missing field \"beta\""));
  CHECK(contains(thrownMessage<ValidationError>([] {
          paramsFromJson(
              R"({"g_p":1,"g_c":1,"delta_c":0,"Delta":0,"alpha":0,"beta":1,"gamma":1})");
        }),
        "unknown field \"gamma\""));
  CHECK(contains(thrownMessage<ValidationError>([] {
          paramsFromJson(R"({"g_p":"x","g_c":1,"delta_c":0,"Delta":0,"alpha":0,"beta":1})");
        }),
        "must be a number"));
  CHECK(!thrownMessage<ValidationError>([] { paramsFromJson("not json"); }).empty());
}

TEST_CASE("every figure preset validates") {
  for (const auto& name : figureNames()) {
    const FigurePreset f = presetFor(name);
    CHECK_NOTHROW(validateParams(f.base));
    for (double v : f.panelValues) CHECK_NOTHROW(applyPanelValue(f, v));
    CHECK(f.deltaCN >= 2);
    CHECK(f.deltaCMin < f.deltaCMax);
  }
}

TEST_CASE("fig6 modulates the Zeeman splitting at g_c = 5") {
  const FigurePreset f = presetFor("fig6");
  CHECK(f.base.g_c == 5.0);
  CHECK(f.scanAxis == ScanAxis::Delta);
  CHECK(f.scanAxisN == 101);
  CHECK(f.scanMin == 0.0);
  CHECK(f.scanMax == 10.0);
}

TEST_CASE("fig5 modulates the coupling at Delta = 5") {
  const FigurePreset f = presetFor("fig5");
  CHECK(f.base.Delta == 5.0);
  CHECK(f.scanAxis == ScanAxis::Gc);
  CHECK(f.scanAxisN == 101);
  CHECK(f.deltaCN == 601);
}

TEST_CASE("fig7 holds four Zeeman panels") {
  const FigurePreset f = presetFor("fig7");
  CHECK(f.panelAxis == "Delta");
  CHECK(f.panelValues == std::vector<double>{0.0, 2.5, 5.0, 7.5});
  CHECK(f.base.g_c == 5.0);
}

TEST_CASE("fig8 holds two damping panels") {
  const FigurePreset f = presetFor("fig8");
  CHECK(f.panelAxis == "alpha");
  CHECK(f.panelValues == std::vector<double>{0.001, 0.1});
  CHECK(f.base.g_c == 5.0);
  CHECK(f.base.Delta == 2.5);
}

TEST_CASE("fig2 spans four coupling panels with the numeric evaluator") {
  const FigurePreset f = presetFor("fig2");
  CHECK(f.evaluator == Evaluator::NumericTripod);
  CHECK(f.panelValues == std::vector<double>{1.0, 2.5, 5.0, 7.5});
  CHECK(f.base.Delta == 5.0);
  CHECK(f.base.alpha == 0.001);
  CHECK(f.base.beta == 0.666);
}

TEST_CASE("unknown figure names are rejected") {
  CHECK(contains(thrownMessage<ValidationError>([] { presetFor("fig9"); }), "unknown figure"));
}
