#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "efsm/model.hpp"
#include "efsm/sim/run_log.hpp"
#include "efsm/sim/scenario.hpp"

namespace efsm::eval {

/// One-step prediction error of a run. Element 0 compares the uniform-prior
/// prediction with the first recognition; element k compares the prediction
/// made at tick k-1 with the recognition at tick k. A prediction that predates
/// a state creation is zero-padded first.
std::vector<double> prediction_error_series(const sim::RunLog& log);

struct SeriesSummary {
  double first = 0.0;
  double max_after_first = 0.0;
  double mean_after_first = 0.0;
  double median = 0.0;  // over the whole series
};
SeriesSummary summarize(std::span<const double> series);

struct DeadEndReport {
  bool pass = true;
  std::optional<ClusterId> dead_end_state;
  std::vector<ClusterId> collision_states;  // one entry per collision, in log order
  std::string reason;
};

/// Checks that every collision tick is recognized as the same state, and that
/// this state is never the most probable one during the final `window_s`
/// seconds of a run that ended without a collision. No collisions is a
/// vacuous pass.
DeadEndReport dead_end_consistency(std::span<const sim::RunLog> logs, double window_s = 1.0);

/// Cluster id of the argmax state recognized at the collision tick.
std::optional<ClusterId> collision_state(const sim::RunLog& log);

enum class RunOrder {
  interleaved,  // 1,2,3,4,1,2,3,4,...
  blocked,      // 1,1,...,2,2,...
};

struct CaseEntry {
  sim::ScenarioConfig scenario;
  int repetitions = 20;

  friend bool operator==(const CaseEntry&, const CaseEntry&) = default;
};

struct ExperimentPlan {
  std::vector<CaseEntry> cases;
  RunOrder order = RunOrder::interleaved;
  ModelConfig model;
  /// Scenarios run after training against a copy of the trained model; they
  /// do not change the shared model and are reported separately.
  std::vector<sim::ScenarioConfig> probes;

  std::size_t total_runs() const;

  /// Throws Errc::config_error for an empty plan or non-positive repetitions.
  void validate() const;

  /// The sequence of scenarios in execution order.
  std::vector<const sim::ScenarioConfig*> schedule() const;

  friend bool operator==(const ExperimentPlan&, const ExperimentPlan&) = default;
};

/// Four cases x 20 repetitions, interleaved, with the two early-brake probes
/// (leader brakes at 11 s and 15 s).
ExperimentPlan default_plan();

struct RunSummary {
  std::size_t run_index = 0;  // 1-based position in the schedule
  std::string name;
  int case_id = 0;
  std::size_t ticks = 0;
  bool collision = false;
  std::optional<std::size_t> collision_step;
  std::optional<ClusterId> collision_state;
  std::size_t state_count = 0;  // after the run
  std::vector<double> jsd;
  SeriesSummary jsd_summary;
};

struct ProbeResult {
  std::string name;
  bool collision = false;
  std::optional<std::size_t> collision_step;
  std::optional<ClusterId> collision_state;
  std::size_t state_count = 0;
};

struct EvalReport {
  std::vector<RunSummary> runs;
  DeadEndReport dead_end;
  std::optional<ClusterId> dead_end_state;
  std::vector<std::pair<std::size_t, std::size_t>> state_count_trajectory;  // (run, n)
  double max_jsd_after_first = 0.0;
  double mean_jsd_after_first = 0.0;
  std::vector<ProbeResult> probes;
  std::size_t final_state_count = 0;

  std::size_t total_jsd_count() const;
};

struct ExperimentResult {
  EvalReport report;
  std::vector<sim::RunLog> logs;
};

/// Executes the plan in order against `model` (which keeps training across
/// runs and is left in its trained state), then runs the probes on a copy.
ExperimentResult run_experiment(const ExperimentPlan& plan, EfsmModel& model);

/// Builds the report from already-simulated logs.
EvalReport evaluate_logs(std::span<const sim::RunLog> logs);

}  // namespace efsm::eval
