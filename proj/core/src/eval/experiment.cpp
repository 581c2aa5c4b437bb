#include "efsm/eval/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efsm/error.hpp"
#include "efsm/eval/jsd.hpp"
#include "efsm/sim/runner.hpp"

namespace efsm::eval {

std::vector<double> prediction_error_series(const sim::RunLog& log) {
  std::vector<double> out;
  out.reserve(log.records.size());
  const StateEstimate* prediction = &log.initial_prediction;
  for (const sim::RunRecord& rec : log.records) {
    const std::size_t n = std::max(prediction->size(), rec.recognized.size());
    const StateEstimate p = prediction->padded(n);
    const StateEstimate q = rec.recognized.padded(n);
    out.push_back(jsd(p.probs, q.probs));
    if (rec.predicted.size() == 0) break;
    prediction = &rec.predicted;
  }
  return out;
}

SeriesSummary summarize(std::span<const double> series) {
  SeriesSummary s;
  if (series.empty()) return s;
  s.first = series.front();
  if (series.size() > 1) {
    double total = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i) {
      s.max_after_first = std::max(s.max_after_first, series[i]);
      total += series[i];
    }
    s.mean_after_first = total / static_cast<double>(series.size() - 1);
  }
  std::vector<double> sorted(series.begin(), series.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

std::optional<ClusterId> collision_state(const sim::RunLog& log) {
  if (!log.collided() || log.records.empty()) return std::nullopt;
  return static_cast<ClusterId>(log.records.back().recognized.argmax() + 1);
}

DeadEndReport dead_end_consistency(std::span<const sim::RunLog> logs, double window_s) {
  DeadEndReport rep;
  for (const sim::RunLog& log : logs)
    if (auto s = collision_state(log)) rep.collision_states.push_back(*s);

  if (rep.collision_states.empty()) {
    rep.reason = "no collisions observed";
    return rep;
  }
  const ClusterId first = rep.collision_states.front();
  for (ClusterId s : rep.collision_states) {
    if (s != first) {
      rep.pass = false;
      rep.reason = "collisions recognized as states " + std::to_string(first) + " and " +
                   std::to_string(s);
      return rep;
    }
  }
  rep.dead_end_state = first;

  for (const sim::RunLog& log : logs) {
    if (log.collided() || log.records.size() < 2) continue;
    const double dt = log.records[1].time - log.records[0].time;
    const auto window = static_cast<std::size_t>(std::llround(window_s / dt));
    const std::size_t begin = log.records.size() > window ? log.records.size() - window : 0;
    for (std::size_t i = begin; i < log.records.size(); ++i) {
      const auto s = static_cast<ClusterId>(log.records[i].recognized.argmax() + 1);
      if (s == first) {
        rep.pass = false;
        rep.reason = "dead-end state " + std::to_string(first) + " recognized at the end of " +
                     log.name + " without a collision (step " + std::to_string(i) + ")";
        return rep;
      }
    }
  }
  rep.reason = "all " + std::to_string(rep.collision_states.size()) +
               " collisions recognized as state " + std::to_string(first);
  return rep;
}

std::size_t ExperimentPlan::total_runs() const {
  std::size_t n = 0;
  for (const CaseEntry& c : cases) n += static_cast<std::size_t>(std::max(c.repetitions, 0));
  return n;
}

void ExperimentPlan::validate() const {
  if (cases.empty()) throw Error(Errc::config_error, "plan.cases must not be empty");
  for (const CaseEntry& c : cases) {
    if (c.repetitions < 1) throw Error(Errc::config_error, "plan repetitions must be >= 1");
    c.scenario.validate();
  }
  for (const auto& p : probes) p.validate();
  model.validate();
}

std::vector<const sim::ScenarioConfig*> ExperimentPlan::schedule() const {
  std::vector<const sim::ScenarioConfig*> out;
  out.reserve(total_runs());
  if (order == RunOrder::blocked) {
    for (const CaseEntry& c : cases)
      for (int i = 0; i < c.repetitions; ++i) out.push_back(&c.scenario);
    return out;
  }
  int rounds = 0;
  for (const CaseEntry& c : cases) rounds = std::max(rounds, c.repetitions);
  for (int round = 0; round < rounds; ++round)
    for (const CaseEntry& c : cases)
      if (round < c.repetitions) out.push_back(&c.scenario);
  return out;
}

ExperimentPlan default_plan() {
  ExperimentPlan plan;
  for (int id = 1; id <= 4; ++id) plan.cases.push_back({sim::standard_case(id), 20});
  plan.probes = {sim::early_brake_case(11.0), sim::early_brake_case(15.0)};
  return plan;
}

std::size_t EvalReport::total_jsd_count() const {
  std::size_t n = 0;
  for (const RunSummary& r : runs) n += r.jsd.size();
  return n;
}

EvalReport evaluate_logs(std::span<const sim::RunLog> logs) {
  EvalReport rep;
  double total = 0.0;
  std::size_t count = 0;
  std::size_t n_states = 0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const sim::RunLog& log = logs[i];
    RunSummary s;
    s.run_index = i + 1;
    s.name = log.name;
    s.case_id = log.case_id;
    s.ticks = log.records.size();
    s.collision = log.collided();
    s.collision_step = log.collision_step;
    s.collision_state = collision_state(log);
    if (!log.records.empty()) n_states = log.records.back().state_count;
    s.state_count = n_states;
    s.jsd = prediction_error_series(log);
    s.jsd_summary = summarize(s.jsd);
    for (std::size_t k = 1; k < s.jsd.size(); ++k) {
      rep.max_jsd_after_first = std::max(rep.max_jsd_after_first, s.jsd[k]);
      total += s.jsd[k];
      ++count;
    }
    rep.state_count_trajectory.emplace_back(s.run_index, s.state_count);
    rep.runs.push_back(std::move(s));
  }
  rep.mean_jsd_after_first = count ? total / static_cast<double>(count) : 0.0;
  rep.dead_end = dead_end_consistency(logs);
  rep.dead_end_state = rep.dead_end.dead_end_state;
  rep.final_state_count = n_states;
  return rep;
}

ExperimentResult run_experiment(const ExperimentPlan& plan, EfsmModel& model) {
  plan.validate();
  ExperimentResult result;
  result.logs.reserve(plan.total_runs());
  for (const sim::ScenarioConfig* cfg : plan.schedule())
    result.logs.push_back(sim::run_case(*cfg, model));
  result.report = evaluate_logs(result.logs);
  if (result.report.runs.empty() || result.logs.back().records.empty())
    result.report.final_state_count = model.state_count();

  for (const sim::ScenarioConfig& probe : plan.probes) {
    EfsmModel copy = model;
    const sim::RunLog log = sim::run_case(probe, copy);
    result.report.probes.push_back({log.name, log.collided(), log.collision_step,
                                    collision_state(log), copy.state_count()});
  }
  return result;
}

}  // namespace efsm::eval
