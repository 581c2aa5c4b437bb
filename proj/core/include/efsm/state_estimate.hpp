#pragma once

#include <cstddef>

#include "efsm/linalg.hpp"

namespace efsm {

/// Probability distribution over the states that exist at a given tick.
struct StateEstimate {
  Vector probs;

  std::size_t size() const noexcept { return probs.size(); }

  /// Index of the most probable state, ties to the lowest index.
  std::size_t argmax() const;

  /// Copy extended with zeros to length n. States created after the estimate
  /// was formed had no mass in it.
  StateEstimate padded(std::size_t n) const;

  static StateEstimate uniform(std::size_t n);

  friend bool operator==(const StateEstimate&, const StateEstimate&) = default;
};

/// True when every entry is in [0, 1] and the sum is within tol of 1.
bool is_simplex(const Vector& p, double tol = 1e-9);

}  // namespace efsm
