#pragma once

#include <cstddef>
#include <span>

#include "efsm/linalg.hpp"

namespace efsm {

/// One feature vector z_t fed to the model. In the car-following experiment
/// the features are [headway m, follower speed m/s, leader speed m/s].
struct Observation {
  Vector values;
  std::size_t step_index = 0;
};

/// Throws Errc::invalid_observation on a wrong dimension or non-finite entry.
void validate(std::span<const double> values, std::size_t expected_dim);

/// Per-dimension affine map applied before clustering: z' = (z - offset) / scale.
/// Empty vectors mean identity.
struct Normalization {
  Vector offset;
  Vector scale;

  bool is_identity() const noexcept { return offset.empty() && scale.empty(); }
  Vector apply(std::span<const double> z) const;
  void validate(std::size_t dim) const;

  friend bool operator==(const Normalization&, const Normalization&) = default;
};

}  // namespace efsm
