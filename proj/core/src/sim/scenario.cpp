#include "efsm/sim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "efsm/error.hpp"

namespace efsm::sim {

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(Errc::config_error, m); };
  if (!(dt > 0.0) || !std::isfinite(dt)) fail("scenario.dt must be > 0");
  if (horizon_steps < 0) fail("scenario.horizon_steps must be >= 0");
  if (!(initial_gap > 0.0) || !std::isfinite(initial_gap)) fail("scenario.initial_gap must be > 0");
  follower_initial.validate();
  follower_after.validate();
  preceding.validate();
  if (!(action_bounds.hi > action_bounds.lo)) fail("scenario.action_bounds must satisfy lo < hi");
  if (!(brake_decel > 0.0) || !std::isfinite(brake_decel)) fail("scenario.brake_decel must be > 0");
  if (!(leader_max_speed > 0.0)) fail("scenario.leader_max_speed must be > 0");
  if (switch_time && (!(*switch_time >= 0.0) || *switch_time > horizon_steps * dt))
    fail("scenario.switch_time must lie within the horizon");
  if (forced_brake_time && !(*forced_brake_time >= 0.0))
    fail("scenario.forced_brake_time must be >= 0");
}

const IdmParams& ScenarioConfig::follower_at(double time) const {
  return switch_time && time >= *switch_time ? follower_after : follower_initial;
}

ScenarioConfig standard_case(int case_id) {
  ScenarioConfig cfg;
  cfg.case_id = case_id;
  cfg.name = "case" + std::to_string(case_id);
  switch (case_id) {
    case 1:
      cfg.follower_initial = cfg.follower_after = aggressive_preset();
      break;
    case 2:
      cfg.follower_initial = cfg.follower_after = normal_preset();
      break;
    case 3:
      cfg.follower_initial = aggressive_preset();
      cfg.follower_after = normal_preset();
      cfg.switch_time = 15.0;
      break;
    case 4:
      cfg.follower_initial = normal_preset();
      cfg.follower_after = aggressive_preset();
      cfg.switch_time = 10.0;
      break;
    default:
      throw Error(Errc::config_error, "case_id must be 1..4");
  }
  return cfg;
}

ScenarioConfig early_brake_case(double brake_time) {
  ScenarioConfig cfg = standard_case(1);
  cfg.forced_brake_time = brake_time;
  char buf[32];
  std::snprintf(buf, sizeof buf, "early_brake_%gs", brake_time);
  cfg.name = buf;
  return cfg;
}

}  // namespace efsm::sim
