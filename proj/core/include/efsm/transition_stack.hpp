#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "efsm/linalg.hpp"

namespace efsm {

/// Per-action frequency matrices F and row totals F_o, identified online with
/// exponential forgetting:
///   F   <- (1 - phi) F   + phi τγᵀ
///   F_o <- (1 - phi) F_o + phi τ(γᵀ1)
/// and expanded by one row/column of eps_bar whenever a state is created.
///
/// Every row decays on every update of its action, so rows that see no mass
/// for long stretches would underflow to zero. Each row therefore carries a
/// binary exponent: F_true(i, j) = F_stored(i, j) * 2^-exponent(i), with the
/// stored row total kept in [1, 2). Scaling by powers of two is exact, so the
/// stored values follow the plain recursion bit for bit while they stay in
/// the normal double range.
class TransitionStack {
 public:
  struct Block {
    Matrix f;                    // stored (scaled) F, n x n
    Vector f_o;                  // stored (scaled) F_o, n
    std::vector<int> exponent;   // per-row scale, see class comment

    friend bool operator==(const Block&, const Block&) = default;
  };

  TransitionStack(int actions, double phi, double eps_bar);

  int actions() const noexcept { return static_cast<int>(blocks_.size()); }
  std::size_t states() const noexcept { return n_; }
  double phi() const noexcept { return phi_; }
  double eps_bar() const noexcept { return eps_bar_; }

  /// Adds one state to every action's matrices.
  void expand();

  /// Updates action r (1-based) with the outer product prev · curᵀ.
  void identify(int r, std::span<const double> prev, std::span<const double> cur);

  /// diag(F_o)^-1 F for action r. A row without any mass (only reachable with
  /// phi = 1) is returned as the uniform distribution.
  Matrix transition_matrix(int r) const;

  /// Unscaled F and F_o. Entries of long-idle rows may underflow here even
  /// though the stored representation keeps them.
  Matrix frequencies(int r) const;
  Vector row_totals(int r) const;

  const Block& block(int r) const;
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Largest relative |F_o(i) - Σ_j F(i,j)| over all actions and rows, with
  /// the (action, row) where it occurs.
  struct Audit {
    double worst = 0.0;
    int action = 0;
    std::size_t row = 0;
  };
  Audit audit() const;

  /// Rebuilds a stack from stored blocks (snapshot loading).
  static TransitionStack from_blocks(double phi, double eps_bar, std::vector<Block> blocks);

  friend bool operator==(const TransitionStack&, const TransitionStack&) = default;

 private:
  void check_action(int r) const;
  static void normalize_row(Block& b, std::size_t i);
  static void rescale_row(Block& b, std::size_t i, int shift);

  double phi_;
  double eps_bar_;
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace efsm
