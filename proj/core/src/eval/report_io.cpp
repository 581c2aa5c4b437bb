#include "efsm/eval/report_io.hpp"

#include <cstdio>
#include <filesystem>

#include "../json_support.hpp"

namespace efsm::eval {

namespace {

using detail::json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

template <class T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json summary_json(const SeriesSummary& s) {
  return {{"first", s.first},
          {"max_after_first", s.max_after_first},
          {"mean_after_first", s.mean_after_first},
          {"median", s.median}};
}

}  // namespace

std::string run_stem(std::size_t run_index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "run_%03zu", run_index);
  return buf;
}

std::string report_to_json(const EvalReport& report) {
  json runs = json::array();
  for (const RunSummary& r : report.runs)
    runs.push_back({{"run", r.run_index},
                    {"name", r.name},
                    {"case", r.case_id},
                    {"ticks", r.ticks},
                    {"collision", r.collision},
                    {"collision_step", optional_value(r.collision_step)},
                    {"collision_state", optional_value(r.collision_state)},
                    {"state_count", r.state_count},
                    {"jsd", summary_json(r.jsd_summary)}});

  json trajectory = json::array();
  for (const auto& [run, n] : report.state_count_trajectory) trajectory.push_back({run, n});

  json probes = json::array();
  for (const ProbeResult& p : report.probes)
    probes.push_back({{"name", p.name},
                      {"collision", p.collision},
                      {"collision_step", optional_value(p.collision_step)},
                      {"collision_state", optional_value(p.collision_state)},
                      {"state_count", p.state_count}});

  json j;
  j["runs"] = runs;
  j["dead_end"] = {{"pass", report.dead_end.pass},
                   {"state", optional_value(report.dead_end.dead_end_state)},
                   {"collision_states", report.dead_end.collision_states},
                   {"reason", report.dead_end.reason}};
  j["state_count_trajectory"] = trajectory;
  j["final_state_count"] = report.final_state_count;
  j["max_jsd_after_first"] = report.max_jsd_after_first;
  j["mean_jsd_after_first"] = report.mean_jsd_after_first;
  j["probes"] = probes;
  return j.dump(2) + "\n";
}

std::string jsd_csv(const RunSummary& run) {
  std::string out = "tick,jsd\n";
  for (std::size_t k = 0; k < run.jsd.size(); ++k)
    out += std::to_string(k) + "," + num(run.jsd[k]) + "\n";
  return out;
}

std::string plot_csv(const EvalReport& report) {
  std::string out = "run,tick,metric,value\n";
  for (const RunSummary& r : report.runs) {
    const std::string run = std::to_string(r.run_index) + ",";
    for (std::size_t k = 0; k < r.jsd.size(); ++k)
      out += run + std::to_string(k) + ",jsd," + num(r.jsd[k]) + "\n";
    out += run + std::to_string(r.ticks ? r.ticks - 1 : 0) + ",state_count," +
           std::to_string(r.state_count) + "\n";
  }
  return out;
}

void write_report(const EvalReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "jsd");
  detail::write_text_file((fs::path(dir) / "report.json").string(), report_to_json(report));
  detail::write_text_file((fs::path(dir) / "plot.csv").string(), plot_csv(report));
  for (const RunSummary& r : report.runs)
    detail::write_text_file((fs::path(dir) / "jsd" / (run_stem(r.run_index) + ".csv")).string(),
                            jsd_csv(r));
}

}  // namespace efsm::eval
