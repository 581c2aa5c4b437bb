#pragma once

#include <cstddef>
#include <span>

#include "efsm/linalg.hpp"

namespace efsm {

/// Running sums that let the potential of a new input be computed in O(m)
/// without storing the history. `count` is the number of committed
/// observations, so the tick being processed is t = count + 1.
struct PotentialAccumulators {
  double b = 0.0;   // Σ_{k<t} z_kᵀz_k
  Vector col_sums;  // Σ_{k<t} z_k, per dimension
  std::size_t count = 0;
  Vector previous;  // z_{t-1}, needed by the center-potential recursion

  explicit PotentialAccumulators(std::size_t dim = 0) : col_sums(dim, 0.0) {}

  std::size_t next_tick() const noexcept { return count + 1; }
  std::size_t dim() const noexcept { return col_sums.size(); }

  friend bool operator==(const PotentialAccumulators&, const PotentialAccumulators&) = default;
};

/// Potential of `z` against everything committed so far:
///   (t-1) / ((t-1)(zᵀz + 1) - 2 zᵀΣz_k + b)
/// which equals (t-1) / ((t-1) + Σ_k ||z - z_k||²). Returns 1 at t = 1.
/// Does not modify `acc`.
double potential_of_input(const PotentialAccumulators& acc, std::span<const double> z);

/// Adds `z` to the running sums. Called once per accepted observation, after
/// the structural decision for that tick has been made.
void commit(PotentialAccumulators& acc, std::span<const double> z);

/// One step of the center-potential recursion at tick t:
///   (t-1) P / ((t-2) + P (1 + rho ||center - z_{t-1}||²))
double updated_center_potential(double previous_potential, std::size_t t, double rho,
                                double squared_distance_to_previous);

}  // namespace efsm
