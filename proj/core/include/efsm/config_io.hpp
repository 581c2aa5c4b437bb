#pragma once

#include <optional>
#include <span>
#include <string>

#include "efsm/eval/experiment.hpp"
#include "efsm/model.hpp"
#include "efsm/sim/scenario.hpp"

namespace efsm {

/// Everything a command needs, resolved from one JSON document:
///
///   {
///     "model":      { "phi": 0.0003, "assignment": "nearest_center", ... },
///     "scenario":   { "case": 1, "initial_gap": 36, ... },
///     "experiment": { "order": "interleaved",
///                     "cases":  [ { "scenario": { "case": 1 }, "repetitions": 20 }, ... ],
///                     "probes": [ { "case": 1, "forced_brake_time": 11 }, ... ] }
///   }
///
/// Every section and key is optional; missing values take the library
/// defaults (`ModelConfig{}`, case 1, `eval::default_plan()`). A scenario with
/// a "case" key starts from that standard case. Follower and leader
/// parameters are either a preset name ("aggressive", "normal",
/// "preceding") or an object with a_max, v0, s0, T, b_comf, delta.
/// Unknown keys are errors.
struct Settings {
  ModelConfig model;
  sim::ScenarioConfig scenario;
  eval::ExperimentPlan plan;  // plan.model == model
};

/// Parses `text` and applies `overrides` ("dotted.path=value", e.g.
/// "model.phi=0.2" or "experiment.cases.0.repetitions=1") before conversion.
/// A value that parses as JSON is used as such; anything else is a string.
/// Throws Errc::config_error with the offending path or line.
Settings parse_settings(const std::string& text, std::span<const std::string> overrides = {});

/// As parse_settings, reading the file at `path`; no path means "{}".
Settings load_settings(const std::optional<std::string>& path,
                       std::span<const std::string> overrides = {});

/// Fully resolved document; parse_settings(to_json(s)) == s.
std::string to_json(const Settings& s);

}  // namespace efsm
