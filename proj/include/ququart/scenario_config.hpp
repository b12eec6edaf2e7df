// JSON configuration for the CLI. Kept separate from scenario.hpp so the
// core headers stay free of the JSON dependency.
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "scenario.hpp"
#include "states.hpp"

namespace ququart::scenario {

struct ScenarioConfig {
  std::optional<QuquartCoeffs> coefficients;  // for analyze
  std::optional<SweepRequest> sweep;          // for sweep
  std::vector<std::string> outputs;           // sweep column subset
};

namespace detail {

inline cx parse_complex(const nlohmann::json& j, const std::string& path) {
  if (j.is_number()) return cx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cx(j[0].get<double>(), j[1].get<double>());
  throw ConfigError(path + ": expected a number or a [re, im] pair");
}

inline double require_number(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string("sweep.") + key + ": expected a number");
  return j[key].get<double>();
}

}  // namespace detail

/// Parses one JSON document. Shape:
/// {
///   "coefficients": [[re,im], [re,im], [re,im], [re,im]],
///   "basis": "natural" | "mixed",          // natural: C1..C4; mixed: C1,B+,C4,B-
///   "sweep": {"family": "example2a", "from": 0, "to": 1, "steps": 201,
///             "parameter": "b_minus", "phi_plus": 0, "phi1": 0, "phi4": 0},
///   "outputs": ["K", "C", "P"]
/// }
/// Unknown keys are rejected so typos surface as config errors.
inline ScenarioConfig parse_config_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "coefficients" && key != "basis" && key != "sweep" && key != "outputs")
      throw ConfigError("unknown config key '" + key + "'");
  }

  ScenarioConfig cfg;

  if (doc.contains("coefficients")) {
    const auto& arr = doc["coefficients"];
    if (!arr.is_array() || arr.size() != 4)
      throw ConfigError("coefficients: expected an array of 4 complex values");
    std::array<cx, 4> v;
    for (std::size_t k = 0; k < 4; ++k)
      v[k] = detail::parse_complex(arr[k], "coefficients[" + std::to_string(k) + "]");

    std::string basis = "natural";
    if (doc.contains("basis")) {
      if (!doc["basis"].is_string()) throw ConfigError("basis: expected a string");
      basis = doc["basis"].get<std::string>();
    }
    if (basis == "natural") {
      cfg.coefficients = QuquartCoeffs::make(v[0], v[1], v[2], v[3]);
    } else if (basis == "mixed") {
      cfg.coefficients = from_mixed_coeffs(MixedCoeffs::make(v[0], v[1], v[2], v[3]));
    } else {
      throw ConfigError("basis: expected \"natural\" or \"mixed\"");
    }
  } else if (doc.contains("basis")) {
    throw ConfigError("basis given without coefficients");
  }

  if (doc.contains("sweep")) {
    const auto& sw = doc["sweep"];
    if (!sw.is_object()) throw ConfigError("sweep: expected an object");
    for (const auto& item : sw.items()) {
      const std::string& key = item.key();
      if (key != "family" && key != "from" && key != "to" && key != "steps" &&
          key != "parameter" && key != "phi_plus" && key != "phi1" && key != "phi4")
        throw ConfigError("unknown sweep key '" + key + "'");
    }
    SweepRequest req;
    if (!sw.contains("family") || !sw["family"].is_string())
      throw ConfigError("sweep.family: required, one of example1/example2a/example2b");
    req.family = family_from_name(sw["family"].get<std::string>());
    if (sw.contains("parameter")) {
      const std::string p = sw["parameter"].is_string() ? sw["parameter"].get<std::string>() : "";
      if (p != "b_minus" && p != "b")
        throw ConfigError("sweep.parameter: only 'b_minus' sweeps are supported");
    }
    req.from = detail::require_number(sw, "from", 0.0);
    req.to = detail::require_number(sw, "to", 1.0);
    if (sw.contains("steps")) {
      if (!sw["steps"].is_number_integer()) throw ConfigError("sweep.steps: expected an integer");
      req.steps = sw["steps"].get<int>();
    }
    req.phases.phi_plus = detail::require_number(sw, "phi_plus", 0.0);
    req.phases.phi1 = detail::require_number(sw, "phi1", 0.0);
    req.phases.phi4 = detail::require_number(sw, "phi4", 0.0);
    cfg.sweep = req;
  }

  if (doc.contains("outputs")) {
    const auto& arr = doc["outputs"];
    if (!arr.is_array()) throw ConfigError("outputs: expected an array of column names");
    for (const auto& item : arr) {
      if (!item.is_string()) throw ConfigError("outputs: entries must be strings");
      cfg.outputs.push_back(item.get<std::string>());
    }
  }

  return cfg;
}

inline ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace ququart::scenario
