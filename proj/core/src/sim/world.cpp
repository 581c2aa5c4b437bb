#include "efsm/sim/world.hpp"

#include <algorithm>

namespace efsm::sim {

World World::initial(const ScenarioConfig& cfg) {
  World w;
  w.follower = {0.0, 0.0};
  w.preceding = {cfg.initial_gap, 0.0};
  return w;
}

void update_brake_latch(World& world, const ScenarioConfig& cfg, double time) {
  if (world.brake_latched) return;
  if (world.preceding.velocity >= cfg.leader_max_speed ||
      (cfg.forced_brake_time && time >= *cfg.forced_brake_time))
    world.brake_latched = true;
}

double preceding_policy(const World& world, const ScenarioConfig& cfg) {
  if (!world.brake_latched) return free_road_accel(cfg.preceding, world.preceding.velocity);
  return world.preceding.velocity > 0.0 ? -cfg.brake_decel : 0.0;
}

namespace {

VehicleState advance(VehicleState s, double u, double dt) {
  s.velocity = std::max(0.0, s.velocity + u * dt);
  s.position += s.velocity * dt;
  return s;
}

}  // namespace

World step_world(const World& world, double u_follower, double u_preceding, double dt) {
  World next = world;
  next.follower = advance(world.follower, u_follower, dt);
  next.preceding = advance(world.preceding, u_preceding, dt);
  return next;
}

bool detect_collision(const World& world) noexcept { return world.headway() <= 0.0; }

}  // namespace efsm::sim
