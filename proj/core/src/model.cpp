#include "efsm/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "efsm/error.hpp"

namespace efsm {

void ModelConfig::validate() const {
  if (dimension < 1) throw Error(Errc::config_error, "model.dimension must be >= 1");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw Error(Errc::config_error, "model.rho must be >= 0");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw Error(Errc::config_error, "model.eps must be >= 0");
  if (!(phi >= 0.0 && phi <= 1.0)) throw Error(Errc::config_error, "model.phi must lie in [0, 1]");
  if (!(eps_bar > 0.0) || !std::isfinite(eps_bar))
    throw Error(Errc::config_error, "model.eps_bar must be > 0");
  if (!(spread_floor > 0.0) || !std::isfinite(spread_floor))
    throw Error(Errc::config_error, "model.spread_floor must be > 0");
  (void)codec();
  normalization.validate(dimension);
}

const char* to_string(ClusteringOutcome::Kind kind) noexcept {
  switch (kind) {
    case ClusteringOutcome::Kind::created: return "created";
    case ClusteringOutcome::Kind::center_replaced: return "replaced";
    case ClusteringOutcome::Kind::assigned: return "assigned";
  }
  return "?";
}

EfsmModel::EfsmModel(ModelConfig config)
    : config_((config.validate(), std::move(config))),
      codec_(config_.codec()),
      acc_(config_.dimension),
      stack_(codec_.size(), config_.phi, config_.eps_bar) {}

Vector EfsmModel::normalized(const Observation& z) const {
  validate(z.values, config_.dimension);
  return config_.normalization.apply(z.values);
}

ClusteringOutcome EfsmModel::step_clustering(const Observation& z) {
  const Vector zn = normalized(z);
  const std::size_t t = acc_.next_tick();

  double potential = 1.0;
  if (t > 1) {
    potential = potential_of_input(acc_, zn);
    for (Cluster& c : clusters_)
      c.potential = updated_center_potential(c.potential, t, config_.rho,
                                             squared_distance(c.center, acc_.previous));
  }

  ClusteringOutcome outcome;
  auto create = [&] {
    clusters_.push_back(Cluster::seeded(next_id_++, zn, potential));
    stack_.expand();
    outcome = {ClusteringOutcome::Kind::created, clusters_.back().id};
  };

  if (clusters_.empty()) {
    create();
  } else {
    double best_potential = clusters_.front().potential;
    for (const Cluster& c : clusters_) best_potential = std::max(best_potential, c.potential);

    if (potential > best_potential) {
      std::size_t closest = 0;
      double closest_d2 = squared_distance(zn, clusters_.front().center);
      for (std::size_t i = 1; i < clusters_.size(); ++i) {
        const double d2 = squared_distance(zn, clusters_[i].center);
        if (d2 < closest_d2) {
          closest_d2 = d2;
          closest = i;
        }
      }
      if (std::sqrt(closest_d2) < config_.eps) {
        Cluster& c = clusters_[closest];
        c.center = zn;
        c.potential = potential;
        outcome = {ClusteringOutcome::Kind::center_replaced, c.id};
      } else {
        create();
      }
    }
  }

  commit(acc_, zn);
  return outcome;
}

StateEstimate EfsmModel::recognize(const Observation& z) const {
  return recognize_normalized(normalized(z));
}

StateEstimate EfsmModel::recognize_normalized(std::span<const double> z) const {
  if (clusters_.empty()) throw Error(Errc::no_states, "recognition needs at least one state");

  // λ_i = η_i / Σ η_j with η_i = exp(-||z - c_i||² / var_i), evaluated with
  // the largest exponent factored out so distant clusters cannot underflow
  // every term at once.
  Vector log_eta(clusters_.size());
  for (std::size_t i = 0; i < clusters_.size(); ++i)
    log_eta[i] = -squared_distance(z, clusters_[i].center) /
                 clusters_[i].scalar_variance(config_.spread_floor);
  const double top = *std::max_element(log_eta.begin(), log_eta.end());

  StateEstimate e{Vector(clusters_.size())};
  double total = 0.0;
  for (std::size_t i = 0; i < log_eta.size(); ++i) total += e.probs[i] = std::exp(log_eta[i] - top);
  for (double& p : e.probs) p /= total;
  return e;
}

void EfsmModel::assign(const Observation& z, const StateEstimate& estimate) {
  check_estimate(estimate, "assignment estimate");
  const Vector zn = normalized(z);
  std::size_t target = 0;
  if (config_.assignment == AssignmentRule::max_similarity) {
    target = estimate.argmax();
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
      const double d2 = squared_distance(zn, clusters_[i].center);
      if (d2 < best) {
        best = d2;
        target = i;
      }
    }
  }
  clusters_[target].add_member(zn);
}

void EfsmModel::check_estimate(const StateEstimate& e, const char* what) const {
  if (e.size() != clusters_.size())
    throw Error(Errc::dimension_mismatch, std::string(what) + " has length " +
                                              std::to_string(e.size()) + ", model has " +
                                              std::to_string(clusters_.size()) + " states");
}

void EfsmModel::identify_transition(int r, const StateEstimate& prev, const StateEstimate& cur) {
  check_estimate(prev, "previous estimate");
  check_estimate(cur, "current estimate");
  stack_.identify(r, prev.probs, cur.probs);
}

Matrix EfsmModel::transition_matrix(int r) const { return stack_.transition_matrix(r); }

Matrix EfsmModel::marginal_matrix() const {
  const std::size_t n = clusters_.size();
  Matrix avg(n, n);
  const int q = stack_.actions();
  for (int r = 1; r <= q; ++r) {
    const Matrix p = stack_.transition_matrix(r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) avg(i, j) += p(i, j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) avg(i, j) /= static_cast<double>(q);
  return avg;
}

StateEstimate EfsmModel::predict_next(int r, const StateEstimate& cur) const {
  check_estimate(cur, "current estimate");
  return {transpose_times(stack_.transition_matrix(r), cur.probs)};
}

StateEstimate EfsmModel::predict_k(int r, const StateEstimate& cur, int k) const {
  if (k < 1) throw Error(Errc::config_error, "prediction horizon must be >= 1");
  StateEstimate out = predict_next(r, cur);
  if (k == 1) return out;
  const Matrix marginal = marginal_matrix();
  for (int step = 1; step < k; ++step) out.probs = transpose_times(marginal, out.probs);
  return out;
}

StateEstimate EfsmModel::predict_from_uniform() const {
  if (clusters_.empty()) throw Error(Errc::no_states, "prediction needs at least one state");
  const StateEstimate u = StateEstimate::uniform(clusters_.size());
  return {transpose_times(marginal_matrix(), u.probs)};
}

EfsmModel::TickResult EfsmModel::tick(const Observation& z, std::optional<int> previous_action) {
  TickResult result;
  result.outcome = step_clustering(z);
  result.estimate = recognize(z);
  if (result.outcome.kind != ClusteringOutcome::Kind::created) assign(z, result.estimate);
  if (previous_action && last_estimate_)
    identify_transition(*previous_action, last_estimate_->padded(clusters_.size()), result.estimate);
  last_estimate_ = result.estimate;
  return result;
}

EfsmModel EfsmModel::restore(ModelConfig config, std::vector<Cluster> clusters,
                             PotentialAccumulators acc, TransitionStack stack,
                             std::optional<StateEstimate> last_estimate, ClusterId next_id) {
  auto fail = [](const std::string& msg) { throw Error(Errc::snapshot_error, msg); };
  EfsmModel m(std::move(config));
  const std::size_t dim = m.config_.dimension;

  ClusterId last_id = 0;
  for (const Cluster& c : clusters) {
    if (c.id <= last_id) fail("cluster ids must be positive and increasing");
    last_id = c.id;
    if (c.center.size() != dim || c.member_mean.size() != dim || c.member_m2.size() != dim)
      fail("cluster " + std::to_string(c.id) + " has wrong dimension");
    if (!(c.potential > 0.0) || !std::isfinite(c.potential))
      fail("cluster " + std::to_string(c.id) + " potential must be positive");
    if (c.member_count < 1) fail("cluster " + std::to_string(c.id) + " has no members");
  }
  if (next_id <= last_id) fail("next cluster id must exceed every existing id");
  if (acc.dim() != dim) fail("accumulators have wrong dimension");
  if (acc.count > 0 && acc.previous.size() != dim) fail("previous observation missing");
  if (acc.count == 0 && !clusters.empty()) fail("clusters present without any observation");
  if (stack.actions() != m.codec_.size()) fail("transition stack does not match the action codec");
  if (stack.states() != clusters.size()) fail("transition stack does not match the state count");
  if (stack.phi() != m.config_.phi || stack.eps_bar() != m.config_.eps_bar)
    fail("transition stack parameters differ from the configuration");
  if (last_estimate && last_estimate->size() > clusters.size())
    fail("last estimate is longer than the state count");

  m.clusters_ = std::move(clusters);
  m.acc_ = std::move(acc);
  m.stack_ = std::move(stack);
  m.last_estimate_ = std::move(last_estimate);
  m.next_id_ = next_id;
  return m;
}

bool operator==(const EfsmModel& a, const EfsmModel& b) {
  return a.config_ == b.config_ && a.clusters_ == b.clusters_ && a.acc_ == b.acc_ &&
         a.stack_ == b.stack_ && a.last_estimate_ == b.last_estimate_ && a.next_id_ == b.next_id_;
}

}  // namespace efsm
