#pragma once

#include <optional>
#include <string>

#include "efsm/sim/idm.hpp"

namespace efsm::sim {

/// One car-following scenario: a follower driven by IDM behind a leader that
/// accelerates on a free road and brakes to a stop once it reaches
/// `leader_max_speed` (or at `forced_brake_time`, whichever comes first).
struct ScenarioConfig {
  std::string name = "case1";
  int case_id = 1;
  double dt = 0.01;
  int horizon_steps = 3500;
  double initial_gap = 36.0;
  IdmParams follower_initial = aggressive_preset();
  IdmParams follower_after = aggressive_preset();
  std::optional<double> switch_time;
  IdmParams preceding = preceding_preset();
  ActionBounds action_bounds;
  double brake_decel = 3.0;
  double leader_max_speed = 24.0;
  std::optional<double> forced_brake_time;

  void validate() const;

  /// Follower parameters in force at `time`.
  const IdmParams& follower_at(double time) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Case 1 aggressive, 2 normal, 3 aggressive then normal at 15 s,
/// 4 normal then aggressive at 10 s.
ScenarioConfig standard_case(int case_id);

/// Case 1 with the leader's emergency stop forced at `brake_time`.
ScenarioConfig early_brake_case(double brake_time);

}  // namespace efsm::sim
