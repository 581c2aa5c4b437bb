#include "efsm/sim/runner.hpp"

#include "efsm/error.hpp"
#include "efsm/sim/world.hpp"

namespace efsm::sim {

const char* to_string(RunLog::Terminal t) noexcept {
  return t == RunLog::Terminal::collision ? "collision" : "horizon_reached";
}

void check_compatible(const ScenarioConfig& cfg, const EfsmModel& model) {
  if (model.config().dimension != 3)
    throw Error(Errc::config_mismatch, "car-following runs need a 3-dimensional model");
  const ActionCodec& codec = model.codec();
  if (codec.lo() != cfg.action_bounds.lo || codec.hi() != cfg.action_bounds.hi)
    throw Error(Errc::config_mismatch, "model action codec bounds differ from scenario action_bounds");
}

RunLog run_case(const ScenarioConfig& cfg, EfsmModel& model) {
  cfg.validate();
  check_compatible(cfg, model);

  RunLog log;
  log.name = cfg.name;
  log.case_id = cfg.case_id;
  log.records.reserve(static_cast<std::size_t>(cfg.horizon_steps));

  model.reset_episode();
  World world = World::initial(cfg);
  std::optional<int> previous_action;

  for (int k = 0; k < cfg.horizon_steps; ++k) {
    const double time = k * cfg.dt;
    const double gap = world.headway();
    const bool collided = detect_collision(world);

    const Observation z{{gap, world.follower.velocity, world.preceding.velocity},
                        static_cast<std::size_t>(k)};
    auto tick = model.tick(z, previous_action);
    if (k == 0) log.initial_prediction = model.predict_from_uniform();

    RunRecord rec;
    rec.step = static_cast<std::size_t>(k);
    rec.time = time;
    rec.headway = gap;
    rec.v_follower = world.follower.velocity;
    rec.v_preceding = world.preceding.velocity;
    rec.outcome = tick.outcome;
    rec.state_count = model.state_count();
    rec.recognized = std::move(tick.estimate);

    if (collided) {
      log.records.push_back(std::move(rec));
      log.terminal = RunLog::Terminal::collision;
      log.collision_step = static_cast<std::size_t>(k);
      return log;
    }

    const IdmParams& fp = cfg.follower_at(time);
    const double u_f = idm_accel(fp, world.follower.velocity,
                                 world.follower.velocity - world.preceding.velocity, gap,
                                 cfg.action_bounds);
    update_brake_latch(world, cfg, time);
    if (world.brake_latched && !log.brake_step) log.brake_step = static_cast<std::size_t>(k);
    const double u_p = preceding_policy(world, cfg);

    const int r = model.codec().encode(u_f);
    rec.u_follower = u_f;
    rec.action = r;
    rec.predicted = model.predict_next(r, rec.recognized);
    log.records.push_back(std::move(rec));

    previous_action = r;
    world = step_world(world, u_f, u_p, cfg.dt);
  }
  log.terminal = RunLog::Terminal::horizon_reached;
  return log;
}

}  // namespace efsm::sim
