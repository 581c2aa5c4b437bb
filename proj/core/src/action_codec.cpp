#include "efsm/action_codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efsm/error.hpp"

namespace efsm {

ActionCodec::ActionCodec(double lo, double hi, double width) : lo_(lo), hi_(hi), width_(width) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
    throw Error(Errc::config_error, "action bounds must satisfy lo < hi");
  if (!(width > 0.0) || !std::isfinite(width))
    throw Error(Errc::config_error, "action width must be positive");
  q_ = static_cast<int>(std::ceil((hi - lo) / width));
  // (hi - lo) / width can land a hair above an integer, e.g. 1.0000000000000002.
  if (q_ > 1 && lo + (q_ - 1) * width >= hi) --q_;
  q_ = std::max(q_, 1);
}

int ActionCodec::encode(double u) const {
  if (std::isnan(u)) throw Error(Errc::config_error, "cannot encode NaN action");
  u = std::clamp(u, lo_, hi_);
  int r = std::clamp(static_cast<int>(std::ceil((u - lo_) / width_)), 1, q_);
  // The division can be off by an ulp at a boundary; settle against the
  // bounds `interval` reports so encode and contains always agree.
  while (r < q_ && u > interval(r).second) ++r;
  while (r > 1 && u <= interval(r).first) --r;
  return r;
}

std::pair<double, double> ActionCodec::interval(int r) const {
  if (r < 1 || r > q_)
    throw Error(Errc::action_out_of_range, "interval " + std::to_string(r));
  const double lower = lo_ + (r - 1) * width_;
  const double upper = r == q_ ? hi_ : lo_ + r * width_;
  return {lower, upper};
}

double ActionCodec::midpoint(int r) const {
  const auto [lower, upper] = interval(r);
  return 0.5 * (lower + upper);
}

bool ActionCodec::contains(int r, double u) const {
  const auto [lower, upper] = interval(r);
  u = std::clamp(u, lo_, hi_);
  if (r == 1 && u == lo_) return true;
  return lower < u && u <= upper;
}

}  // namespace efsm
