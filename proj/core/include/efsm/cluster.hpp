#pragma once

#include <cstddef>
#include <span>

#include "efsm/linalg.hpp"

namespace efsm {

using ClusterId = int;

/// A determined state. The center comes from eTS; the spread is a Welford
/// variance over the observations assigned to the cluster.
struct Cluster {
  ClusterId id = 0;
  Vector center;
  double potential = 1.0;
  std::size_t member_count = 1;
  Vector member_mean;  // Welford running mean of assigned observations
  Vector member_m2;    // Welford sum of squared deviations

  static Cluster seeded(ClusterId id, std::span<const double> z, double potential);

  void add_member(std::span<const double> z);

  /// Per-dimension population variance of the members, floored at `floor`.
  Vector spread(double floor) const;

  /// Scalar width used by the similarity function: mean of `spread(floor)`.
  double scalar_variance(double floor) const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

}  // namespace efsm
