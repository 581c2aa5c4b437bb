#pragma once

namespace efsm::sim {

/// Intelligent Driver Model preferences of one driver.
struct IdmParams {
  double a_max = 1.0;   // desired maximum acceleration [m/s²]
  double v0 = 25.0;     // desired velocity [m/s]
  double s0 = 2.0;      // desired minimum gap [m]
  double T = 1.5;       // desired time headway [s]
  double b_comf = 2.0;  // desired (comfortable) deceleration [m/s²]
  double delta_exp = 4.0;

  void validate() const;

  friend bool operator==(const IdmParams&, const IdmParams&) = default;
};

struct ActionBounds {
  double lo = -2.5;
  double hi = 2.5;

  friend bool operator==(const ActionBounds&, const ActionBounds&) = default;
};

// Presets used by the four-case experiment.
IdmParams preceding_preset();   // [1.2, 25, 1.0, 1.0, 2.5]
IdmParams aggressive_preset();  // [2.25, 28, 0.8, 0.3, 2.0]
IdmParams normal_preset();      // [1.25, 25, 2.0, 1.5, 2.0]

/// Desired gap s* = max(0, s0 + vT + v·dv / (2√(a·b))).
double desired_gap(const IdmParams& p, double v, double dv);

/// a_max [1 - (v/v0)^δ - (s*/s)²], clamped to `bounds`. dv = v - v_leader.
/// Throws Errc::collision_state for s <= 0.
double idm_accel(const IdmParams& p, double v, double dv, double s, ActionBounds bounds);

/// Acceleration with no leader: a_max [1 - (v/v0)^δ].
double free_road_accel(const IdmParams& p, double v);

}  // namespace efsm::sim
