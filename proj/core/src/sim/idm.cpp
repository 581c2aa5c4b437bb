#include "efsm/sim/idm.hpp"

#include <algorithm>
#include <cmath>

#include "efsm/error.hpp"

namespace efsm::sim {

void IdmParams::validate() const {
  for (double x : {a_max, v0, s0, T, b_comf, delta_exp})
    if (!(x > 0.0) || !std::isfinite(x))
      throw Error(Errc::config_error, "IDM parameters must be positive and finite");
}

IdmParams preceding_preset() { return {1.2, 25.0, 1.0, 1.0, 2.5, 4.0}; }
IdmParams aggressive_preset() { return {2.25, 28.0, 0.8, 0.3, 2.0, 4.0}; }
IdmParams normal_preset() { return {1.25, 25.0, 2.0, 1.5, 2.0, 4.0}; }

double desired_gap(const IdmParams& p, double v, double dv) {
  const double s = p.s0 + v * p.T + v * dv / (2.0 * std::sqrt(p.a_max * p.b_comf));
  return std::max(0.0, s);
}

double free_road_accel(const IdmParams& p, double v) {
  return p.a_max * (1.0 - std::pow(v / p.v0, p.delta_exp));
}

double idm_accel(const IdmParams& p, double v, double dv, double s, ActionBounds bounds) {
  if (!(s > 0.0)) throw Error(Errc::collision_state, "IDM is undefined for a non-positive gap");
  const double ratio = desired_gap(p, v, dv) / s;
  const double u = p.a_max * (1.0 - std::pow(v / p.v0, p.delta_exp) - ratio * ratio);
  return std::clamp(u, bounds.lo, bounds.hi);
}

}  // namespace efsm::sim
