#pragma once

#include <utility>

namespace efsm {

/// Interval encoding of a continuous action. Intervals are (lo + (r-1)w, lo + rw]
/// for r = 1..q, the last one truncated at hi; lo itself maps to r = 1.
class ActionCodec {
 public:
  ActionCodec(double lo, double hi, double width);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return width_; }
  int size() const noexcept { return q_; }

  /// Clamps to [lo, hi] and returns the 1-based interval index.
  int encode(double u) const;

  /// (lower, upper] bounds of interval r.
  std::pair<double, double> interval(int r) const;
  double midpoint(int r) const;

  bool contains(int r, double u) const;

  friend bool operator==(const ActionCodec&, const ActionCodec&) = default;

 private:
  double lo_;
  double hi_;
  double width_;
  int q_;
};

}  // namespace efsm
