#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "efsm/action_codec.hpp"
#include "efsm/cluster.hpp"
#include "efsm/observation.hpp"
#include "efsm/potential.hpp"
#include "efsm/state_estimate.hpp"
#include "efsm/transition_stack.hpp"

namespace efsm {

/// Which cluster an observation joins for the spread statistics.
enum class AssignmentRule {
  max_similarity,  // argmax of the recognized distribution
  nearest_center,  // smallest Euclidean distance to a center
};

struct ModelConfig {
  std::size_t dimension = 3;
  double rho = 0.85;          // center-potential distance weight
  double eps = 0.3;           // center-replacement radius
  double phi = 3e-4;          // transition learning rate, [0, 1]
  double eps_bar = 1e-6;      // initial frequency mass, > 0
  double spread_floor = 1e-3;
  double action_lo = -2.5;
  double action_hi = 2.5;
  double action_width = 0.3;
  Normalization normalization;
  AssignmentRule assignment = AssignmentRule::nearest_center;

  ActionCodec codec() const { return {action_lo, action_hi, action_width}; }

  /// Throws Errc::config_error on out-of-range values.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct ClusteringOutcome {
  enum class Kind { created, center_replaced, assigned };
  Kind kind = Kind::assigned;
  ClusterId id = 0;  // 0 for `assigned`

  friend bool operator==(const ClusteringOutcome&, const ClusteringOutcome&) = default;
};

const char* to_string(ClusteringOutcome::Kind kind) noexcept;

/// The evolving finite state machine: eTS state determination, similarity
/// based recognition, and one transition-frequency stack per action.
///
/// Single writer. Query members are const and may be called freely between
/// mutations.
class EfsmModel {
 public:
  explicit EfsmModel(ModelConfig config);

  const ModelConfig& config() const noexcept { return config_; }
  const ActionCodec& codec() const noexcept { return codec_; }
  std::size_t state_count() const noexcept { return clusters_.size(); }
  const std::vector<Cluster>& clusters() const noexcept { return clusters_; }
  const PotentialAccumulators& accumulators() const noexcept { return acc_; }
  const TransitionStack& transitions() const noexcept { return stack_; }
  const std::optional<StateEstimate>& last_estimate() const noexcept { return last_estimate_; }
  ClusterId next_cluster_id() const noexcept { return next_id_; }

  /// eTS step: potential of z, center-potential update with z_{t-1}, then the
  /// create / replace / assign decision. Creating a state expands the
  /// transition stack in the same call. Commits z to the accumulators.
  ClusteringOutcome step_clustering(const Observation& z);

  /// Normalized similarities to every center; throws Errc::no_states when
  /// no state exists yet.
  StateEstimate recognize(const Observation& z) const;

  /// Adds z to the spread statistics of the cluster chosen by the
  /// assignment rule.
  void assign(const Observation& z, const StateEstimate& estimate);

  /// Identifies the matrices of action r (1-based) from the transition
  /// prev -> cur. Both must have length state_count().
  void identify_transition(int r, const StateEstimate& prev, const StateEstimate& cur);

  Matrix transition_matrix(int r) const;

  /// Action-averaged transition matrix under a uniform action prior.
  Matrix marginal_matrix() const;

  /// One-step prediction x' = Pᵀx under action r.
  StateEstimate predict_next(int r, const StateEstimate& cur) const;

  /// k-step prediction: predict_next followed by k-1 marginal steps.
  StateEstimate predict_k(int r, const StateEstimate& cur, int k) const;

  /// Marginal step from the uniform distribution; used when no recognized
  /// state is available to predict from.
  StateEstimate predict_from_uniform() const;

  struct TickResult {
    ClusteringOutcome outcome;
    StateEstimate estimate;
  };

  /// Full per-tick sequence: clustering, recognition, assignment, then
  /// identification of `previous_action` from the last estimate (zero-padded
  /// if a state was just created) to the new one. The new estimate becomes
  /// last_estimate().
  TickResult tick(const Observation& z, std::optional<int> previous_action);

  /// Forgets the last estimate so the next tick does not identify a
  /// transition across an episode boundary.
  void reset_episode() noexcept { last_estimate_.reset(); }

  /// Rebuilds a model from persisted parts; validates the cross-part
  /// invariants and throws Errc::snapshot_error when they do not hold.
  static EfsmModel restore(ModelConfig config, std::vector<Cluster> clusters,
                           PotentialAccumulators acc, TransitionStack stack,
                           std::optional<StateEstimate> last_estimate, ClusterId next_id);

  friend bool operator==(const EfsmModel&, const EfsmModel&);

 private:
  Vector normalized(const Observation& z) const;
  StateEstimate recognize_normalized(std::span<const double> z) const;
  void check_estimate(const StateEstimate& e, const char* what) const;

  ModelConfig config_;
  ActionCodec codec_;
  std::vector<Cluster> clusters_;
  PotentialAccumulators acc_;
  TransitionStack stack_;
  std::optional<StateEstimate> last_estimate_;
  ClusterId next_id_ = 1;
};

}  // namespace efsm
