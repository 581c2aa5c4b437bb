#pragma once

// JSON <-> struct conversion for configuration types. Shared by the config
// loader and the model snapshot. Not installed.

#include "efsm/eval/experiment.hpp"
#include "efsm/model.hpp"
#include "efsm/sim/scenario.hpp"
#include "json_support.hpp"

namespace efsm::detail {

json to_json(const ModelConfig& m);
json to_json(const sim::IdmParams& p);
json to_json(const sim::ScenarioConfig& s);
json to_json(const eval::ExperimentPlan& plan);  // without the model section

// Readers start from `base` for every key the object leaves out. A scenario
// object with a "case" key starts from that standard case instead.
ModelConfig model_from_json(const json& j, const std::string& path, Errc code,
                            const ModelConfig& base = {});
sim::IdmParams idm_from_json(const json& j, const std::string& path, Errc code,
                             const sim::IdmParams& base);
sim::ScenarioConfig scenario_from_json(const json& j, const std::string& path, Errc code);
eval::ExperimentPlan plan_from_json(const json& j, const std::string& path, Errc code);

const char* to_string(AssignmentRule rule) noexcept;
const char* to_string(eval::RunOrder order) noexcept;

}  // namespace efsm::detail
