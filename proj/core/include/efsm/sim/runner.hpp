#pragma once

#include "efsm/model.hpp"
#include "efsm/sim/run_log.hpp"
#include "efsm/sim/scenario.hpp"

namespace efsm::sim {

/// Simulates one scenario while driving the model tick by tick. The model is
/// mutated and keeps everything it learned; pass the same model to later runs
/// to keep training it.
///
/// Per tick: observe z = [headway, v_f, v_p]; model tick (identifying the
/// previous tick's action); on contact log and stop; otherwise compute IDM
/// accelerations, encode the follower action, predict the next state and
/// advance the world.
///
/// Throws Errc::config_mismatch when the model's codec bounds or dimension do
/// not fit the scenario.
RunLog run_case(const ScenarioConfig& cfg, EfsmModel& model);

/// Throws Errc::config_mismatch when `model` cannot drive `cfg`.
void check_compatible(const ScenarioConfig& cfg, const EfsmModel& model);

}  // namespace efsm::sim
