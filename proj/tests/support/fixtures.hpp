#pragma once

#include <vector>

#include "efsm/model.hpp"

namespace fixture {

/// Model whose clusters are given directly. Each cluster gets the scalar
/// variance `var` in every dimension.
inline efsm::EfsmModel with_clusters(const std::vector<efsm::Vector>& centers, double var,
                                     efsm::ModelConfig cfg = {}) {
  cfg.dimension = centers.front().size();
  std::vector<efsm::Cluster> clusters;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    efsm::Cluster c = efsm::Cluster::seeded(static_cast<efsm::ClusterId>(i + 1), centers[i], 1.0);
    c.member_count = 2;
    c.member_m2.assign(cfg.dimension, 2.0 * var);
    clusters.push_back(c);
  }
  efsm::PotentialAccumulators acc(cfg.dimension);
  acc.count = 1;
  acc.previous = centers.front();
  acc.b = efsm::dot(centers.front(), centers.front());
  acc.col_sums = centers.front();
  efsm::TransitionStack stack(cfg.codec().size(), cfg.phi, cfg.eps_bar);
  for (std::size_t i = 0; i < centers.size(); ++i) stack.expand();
  return efsm::EfsmModel::restore(cfg, std::move(clusters), std::move(acc), std::move(stack),
                                  std::nullopt, static_cast<efsm::ClusterId>(centers.size() + 1));
}

inline efsm::Matrix matrix(const std::vector<std::vector<double>>& rows) {
  efsm::Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

/// Model with one-dimensional states 0, 1, 2, ... and the given row-stochastic
/// matrix per action (action r uses matrices[r-1]).
inline efsm::EfsmModel with_transitions(const std::vector<efsm::Matrix>& matrices) {
  const std::size_t n = matrices.front().rows();
  efsm::ModelConfig cfg;
  cfg.action_lo = 0.0;
  cfg.action_hi = static_cast<double>(matrices.size());
  cfg.action_width = 1.0;
  std::vector<efsm::Vector> centers;
  for (std::size_t i = 0; i < n; ++i) centers.push_back({static_cast<double>(i)});
  efsm::EfsmModel base = with_clusters(centers, 1.0, cfg);

  std::vector<efsm::TransitionStack::Block> blocks;
  for (const efsm::Matrix& p : matrices)
    blocks.push_back({p, efsm::Vector(n, 1.0), std::vector<int>(n, 0)});
  efsm::TransitionStack stack = efsm::TransitionStack::from_blocks(cfg.phi, cfg.eps_bar, blocks);
  return efsm::EfsmModel::restore(base.config(), base.clusters(), base.accumulators(),
                                  std::move(stack), std::nullopt, base.next_cluster_id());
}

}  // namespace fixture
