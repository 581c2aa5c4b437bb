#pragma once

#include <cstddef>

#include "efsm/sim/scenario.hpp"

namespace efsm::sim {

/// Point vehicle on a one-lane road.
struct VehicleState {
  double position = 0.0;
  double velocity = 0.0;

  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

struct World {
  VehicleState follower;
  VehicleState preceding;
  bool brake_latched = false;

  double headway() const noexcept { return preceding.position - follower.position; }

  static World initial(const ScenarioConfig& cfg);

  friend bool operator==(const World&, const World&) = default;
};

/// Sets the leader's brake latch once its speed reaches the trigger speed or
/// the forced brake time has come. The latch never clears.
void update_brake_latch(World& world, const ScenarioConfig& cfg, double time);

/// Leader acceleration: free-road IDM until latched, then -brake_decel until
/// stopped, then 0.
double preceding_policy(const World& world, const ScenarioConfig& cfg);

/// Semi-implicit Euler: v <- max(0, v + u dt), x <- x + v dt.
World step_world(const World& world, double u_follower, double u_preceding, double dt);

/// Contact or overlap: headway <= 0.
bool detect_collision(const World& world) noexcept;

}  // namespace efsm::sim
