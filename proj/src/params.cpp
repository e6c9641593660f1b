#include "tripod/params.hpp"

#include <cmath>
#include <vector>

#include "json.hpp"

namespace tripod {

Params validateParams(const Params& p) {
  std::vector<std::string> errs;
  auto field = [&](double v, const char* name, bool nonnegative, bool positive) {
    if (!std::isfinite(v)) {
      errs.push_back(std::string(name) + " must be finite");
    } else if (positive && v <= 0.0) {
      errs.push_back(std::string(name) + " must be positive");
    } else if (nonnegative && v < 0.0) {
      errs.push_back(std::string(name) + " must be nonnegative");
    }
  };
  field(p.g_p, "g_p", true, false);
  field(p.g_c, "g_c", true, false);
  field(p.delta_c, "delta_c", false, false);
  field(p.Delta, "Delta", false, false);
  field(p.alpha, "alpha", true, false);
  field(p.beta, "beta", false, true);
  if (!errs.empty()) {
    std::string msg = errs.front();
    for (std::size_t i = 1; i < errs.size(); ++i) msg += "; " + errs[i];
    throw ValidationError(msg);
  }
  return p;
}

std::string paramsToJson(const Params& p) {
  nlohmann::json j;
  j["g_p"] = p.g_p;
  j["g_c"] = p.g_c;
  j["delta_c"] = p.delta_c;
  j["Delta"] = p.Delta;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  return j.dump();
}

Params paramsFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("params JSON is not parseable: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("params JSON must be an object");

  static const char* kFields[] = {"g_p", "g_c", "delta_c", "Delta", "alpha", "beta"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* f : kFields) known = known || key == f;
    if (!known) throw ValidationError("params JSON has unknown field \"" + key + "\"");
  }

  Params p;
  auto get = [&](const char* name, double& out) {
    if (!j.contains(name)) throw ValidationError(std::string("params JSON missing field \"") + name + "\"");
    if (!j[name].is_number()) throw ValidationError(std::string("params JSON field \"") + name + "\" must be a number");
    out = j[name].get<double>();
  };
  get("g_p", p.g_p);
  get("g_c", p.g_c);
  get("delta_c", p.delta_c);
  get("Delta", p.Delta);
  get("alpha", p.alpha);
  get("beta", p.beta);
  return validateParams(p);
}

}  // namespace tripod
