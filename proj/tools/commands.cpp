#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "efsm/config_io.hpp"
#include "efsm/eval/report_io.hpp"
#include "efsm/sim/run_log_io.hpp"
#include "efsm/sim/runner.hpp"
#include "efsm/snapshot.hpp"

namespace efsm::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(Errc::config_error, "cannot write " + p.string());
}

/// Snapshot from --model-in, or a fresh model from the config.
EfsmModel initial_model(const Options& o, const Settings& s) {
  if (!o.model_in) return EfsmModel(s.model);
  EfsmModel m = load_snapshot(*o.model_in);
  if (m.codec() != s.model.codec())
    throw Error(Errc::config_mismatch, "action codec of " + *o.model_in +
                                           " differs from the configured model codec");
  return m;
}

std::string model_out_path(const Options& o) {
  return o.model_out ? *o.model_out : (fs::path(o.out) / "model.json").string();
}

void print_summary(const eval::EvalReport& r, std::ostream& log) {
  std::size_t collisions = 0;
  for (const auto& run : r.runs) collisions += run.collision;
  log << r.runs.size() << " runs, " << collisions << " collisions, " << r.final_state_count
      << " states\n";
  log << "dead end: " << (r.dead_end.pass ? "consistent" : "inconsistent") << " ("
      << r.dead_end.reason << ")\n";
  log << "one-step JSD after the first prediction: max " << fmt(r.max_jsd_after_first)
      << ", mean " << fmt(r.mean_jsd_after_first) << "\n";
  std::map<int, const eval::RunSummary*> last;
  for (const auto& run : r.runs) last[run.case_id] = &run;
  for (const auto& [id, run] : last)
    log << "  last case " << id << " run (" << eval::run_stem(run->run_index) << "): max "
        << fmt(run->jsd_summary.max_after_first) << ", first " << fmt(run->jsd_summary.first)
        << ", median " << fmt(run->jsd_summary.median) << "\n";
  for (const auto& p : r.probes)
    log << "probe " << p.name << ": " << (p.collision ? "collision" : "no collision")
        << (p.collision_state ? " in state " + std::to_string(*p.collision_state) : "") << "\n";
}

}  // namespace

int cmd_run(const Options& o, std::ostream& log) {
  const Settings s = load_settings(o.config, o.overrides);
  EfsmModel model = initial_model(o, s);
  sim::check_compatible(s.scenario, model);
  const sim::RunLog run = sim::run_case(s.scenario, model);

  fs::create_directories(o.out);
  sim::save_run(run, o.out, "runlog");
  save_snapshot(model, model_out_path(o));
  if (!o.quiet)
    log << run.name << ": " << sim::to_string(run.terminal) << " after " << run.records.size()
        << " ticks, " << model.state_count() << " states\n";
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& log) {
  const Settings s = load_settings(o.config, o.overrides);
  EfsmModel model = initial_model(o, s);
  for (const eval::CaseEntry& c : s.plan.cases) sim::check_compatible(c.scenario, model);

  const eval::ExperimentResult result = eval::run_experiment(s.plan, model);

  fs::create_directories(fs::path(o.out) / "runs");
  write_file(fs::path(o.out) / "config.json", to_json(s));
  for (std::size_t i = 0; i < result.logs.size(); ++i)
    sim::save_run(result.logs[i], (fs::path(o.out) / "runs").string(), eval::run_stem(i + 1));
  eval::write_report(result.report, o.out);
  save_snapshot(model, model_out_path(o));

  if (!o.quiet) print_summary(result.report, log);
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& log) {
  const fs::path runs = fs::path(o.logs) / "runs";
  if (!fs::is_directory(runs))
    throw Error(Errc::config_error, runs.string() + " is not a directory");
  std::vector<sim::RunLog> logs;
  for (std::size_t i = 1;; ++i) {
    const std::string stem = eval::run_stem(i);
    if (!fs::exists(runs / (stem + ".csv"))) break;
    logs.push_back(sim::load_run(runs.string(), stem));
  }
  if (logs.empty()) throw Error(Errc::config_error, "no run logs found in " + runs.string());
  const eval::EvalReport report = eval::evaluate_logs(logs);
  eval::write_report(report, o.out);
  if (!o.quiet) print_summary(report, log);
  return kOk;
}

int cmd_export_model(const Options& o, std::ostream& log) {
  const Settings s = load_settings(o.config, o.overrides);
  const EfsmModel model = initial_model(o, s);
  const std::string path = model_out_path(o);
  if (const fs::path parent = fs::path(path).parent_path(); !parent.empty())
    fs::create_directories(parent);
  save_snapshot(model, path);
  if (!o.quiet) log << "wrote " << path << " (" << model.state_count() << " states)\n";
  return kOk;
}

int cmd_inspect(const Options& o, std::ostream& log) {
  if (!o.model_in) throw Error(Errc::config_error, "inspect needs a snapshot (--model-in)");
  const EfsmModel m = load_snapshot(*o.model_in);
  log << m.state_count() << " states\n";
  for (const Cluster& c : m.clusters()) {
    log << "  state " << c.id << ": center [";
    for (std::size_t k = 0; k < c.center.size(); ++k) log << (k ? ", " : "") << fmt(c.center[k]);
    log << "], members " << c.member_count << ", potential " << fmt(c.potential) << "\n";
  }
  const TransitionStack& t = m.transitions();
  log << t.actions() << " actions, matrices " << t.states() << "x" << t.states() << "\n";

  const TransitionStack::Audit audit = t.audit();
  constexpr double kTolerance = 1e-9;
  if (audit.worst > kTolerance) {
    log << "row-sum audit FAILED: action " << audit.action << " row " << audit.row + 1
        << " off by " << fmt(audit.worst) << "\n";
    return kAuditFailure;
  }
  log << "row-sum audit ok (worst " << fmt(audit.worst) << ")\n";
  return kOk;
}

}  // namespace efsm::cli
