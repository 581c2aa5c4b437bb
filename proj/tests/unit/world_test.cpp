#include "doctest.h"
#include "efsm/error.hpp"
#include "efsm/sim/world.hpp"

using namespace efsm::sim;

TEST_CASE("zero acceleration advances positions by v dt") {
  World w;
  w.follower = {0.0, 3.0};
  w.preceding = {20.0, 3.0};
  const World n = step_world(w, 0.0, 0.0, 0.01);
  CHECK(n.follower.position == 0.03);
  CHECK(n.preceding.position == 20.0 + 3.0 * 0.01);
  CHECK(n.follower.velocity == 3.0);
  CHECK(n.headway() == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("semi-implicit Euler velocity update") {
  World w;
  w.follower = {0.0, 1.0};
  w.preceding = {10.0, 0.0};
  const World n = step_world(w, -2.5, 0.0, 0.01);
  CHECK(n.follower.velocity == doctest::Approx(0.975).epsilon(1e-15));
  CHECK(n.follower.position == doctest::Approx(0.00975).epsilon(1e-15));
}

TEST_CASE("constant acceleration from rest") {
  World w;
  w.preceding = {100.0, 0.0};
  const double u = 1.3, dt = 0.01;
  double x = 0.0;
  for (int k = 1; k <= 500; ++k) {
    w = step_world(w, u, 0.0, dt);
    x += k * u * dt * dt;  // v_k = k u dt, x_k = Σ v_j dt
    CHECK(w.follower.velocity == doctest::Approx(k * u * dt).epsilon(1e-12));
  }
  CHECK(w.follower.position == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("vehicles never reverse") {
  World w;
  w.follower = {0.0, 0.01};
  w.preceding = {10.0, 0.01};
  const World n = step_world(w, -2.5, -2.5, 0.01);
  CHECK(n.follower.velocity == 0.0);
  CHECK(n.preceding.velocity == 0.0);
  CHECK(n.follower.position == 0.0);
}

TEST_CASE("leader policy") {
  ScenarioConfig cfg;
  World w = World::initial(cfg);
  CHECK(w.headway() == cfg.initial_gap);
  SUBCASE("starts with free-road acceleration") {
    CHECK(preceding_policy(w, cfg) == doctest::Approx(cfg.preceding.a_max).epsilon(1e-15));
  }
  SUBCASE("latched braking until standstill") {
    w.brake_latched = true;
    w.preceding.velocity = 0.01;
    CHECK(preceding_policy(w, cfg) == -cfg.brake_decel);
    const World n = step_world(w, 0.0, preceding_policy(w, cfg), 0.01);
    CHECK(n.preceding.velocity == 0.0);
    CHECK(preceding_policy(n, cfg) == 0.0);
  }
  SUBCASE("latch engages at the trigger speed and stays") {
    w.preceding.velocity = cfg.leader_max_speed - 1e-9;
    update_brake_latch(w, cfg, 20.0);
    CHECK_FALSE(w.brake_latched);
    w.preceding.velocity = cfg.leader_max_speed;
    update_brake_latch(w, cfg, 20.01);
    CHECK(w.brake_latched);
    w.preceding.velocity = 0.0;
    update_brake_latch(w, cfg, 20.02);
    CHECK(w.brake_latched);
  }
  SUBCASE("forced brake time") {
    cfg.forced_brake_time = 11.0;
    update_brake_latch(w, cfg, 10.99);
    CHECK_FALSE(w.brake_latched);
    update_brake_latch(w, cfg, 11.0);
    CHECK(w.brake_latched);
  }
}

TEST_CASE("collision detection") {
  World w;
  w.preceding.position = 5.0;
  CHECK_FALSE(detect_collision(w));
  w.preceding.position = 0.0;
  CHECK(detect_collision(w));
  w.preceding.position = -0.1;
  CHECK(detect_collision(w));
}

TEST_CASE("closing at constant speed is caught at the first non-positive headway") {
  World w;
  w.follower = {0.0, 2.0};
  w.preceding = {1.0, 0.0};
  int first = -1;
  for (int k = 0; k < 100 && first < 0; ++k) {
    if (detect_collision(w)) first = k;
    w = step_world(w, 0.0, 0.0, 0.01);
  }
  // Headway after k steps is 1 - 0.02 k.
  CHECK(first == 50);
}

TEST_CASE("standard cases") {
  CHECK(standard_case(1).follower_initial == aggressive_preset());
  CHECK(standard_case(2).follower_initial == normal_preset());
  const ScenarioConfig c3 = standard_case(3);
  CHECK(c3.follower_at(14.99) == aggressive_preset());
  CHECK(c3.follower_at(15.0) == normal_preset());
  CHECK(c3.follower_at(34.0) == normal_preset());
  const ScenarioConfig c4 = standard_case(4);
  CHECK(c4.follower_at(9.99) == normal_preset());
  CHECK(c4.follower_at(10.0) == aggressive_preset());
  CHECK(standard_case(1).preceding == preceding_preset());
  CHECK(standard_case(1).horizon_steps == 3500);
  CHECK(standard_case(1).dt == 0.01);
  CHECK_THROWS_AS(standard_case(5), efsm::Error);
  CHECK(early_brake_case(11.0).name == "early_brake_11s");
  CHECK(*early_brake_case(15.0).forced_brake_time == 15.0);
}

TEST_CASE("scenario validation") {
  ScenarioConfig c;
  c.dt = 0.0;
  CHECK_THROWS_AS(c.validate(), efsm::Error);
  c = {};
  c.switch_time = 100.0;
  CHECK_THROWS_AS(c.validate(), efsm::Error);
  c = {};
  c.initial_gap = -1.0;
  CHECK_THROWS_AS(c.validate(), efsm::Error);
}
