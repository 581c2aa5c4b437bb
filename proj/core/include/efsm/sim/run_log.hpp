#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "efsm/model.hpp"
#include "efsm/state_estimate.hpp"

namespace efsm::sim {

struct RunRecord {
  std::size_t step = 0;
  double time = 0.0;
  double headway = 0.0;
  double v_follower = 0.0;
  double v_preceding = 0.0;
  double u_follower = 0.0;  // clamped; 0 on the collision tick
  int action = 0;           // 1..q; 0 on the collision tick (no action taken)
  ClusteringOutcome outcome;
  std::size_t state_count = 0;
  StateEstimate recognized;
  StateEstimate predicted;  // for the next tick; empty on the collision tick

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct RunLog {
  enum class Terminal { horizon_reached, collision };

  std::string name;
  int case_id = 0;
  std::vector<RunRecord> records;
  StateEstimate initial_prediction;  // uniform-prior prediction for the first tick
  Terminal terminal = Terminal::horizon_reached;
  std::optional<std::size_t> collision_step;
  std::optional<std::size_t> brake_step;  // first tick with the leader's brake latched

  bool collided() const noexcept { return terminal == Terminal::collision; }

  friend bool operator==(const RunLog&, const RunLog&) = default;
};

const char* to_string(RunLog::Terminal t) noexcept;

}  // namespace efsm::sim
