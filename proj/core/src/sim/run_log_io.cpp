#include "efsm/sim/run_log_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "../json_support.hpp"

namespace efsm::sim {

namespace {

using detail::json;
constexpr Errc kCode = Errc::config_error;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string joined(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += num(v[i]);
  }
  return s;
}

std::string outcome_text(const ClusteringOutcome& o) {
  if (o.kind == ClusteringOutcome::Kind::assigned) return "assigned";
  return std::string(to_string(o.kind)) + ":" + std::to_string(o.id);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

double parse_double(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw Error(kCode, where + ": bad number \"" + s + "\"");
  return x;
}

long long parse_int(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const long long x = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') throw Error(kCode, where + ": bad integer \"" + s + "\"");
  return x;
}

Vector parse_probs(const std::string& s, const std::string& where) {
  Vector v;
  if (s.empty()) return v;
  for (const std::string& part : split(s, ';')) v.push_back(parse_double(part, where));
  return v;
}

ClusteringOutcome parse_outcome(const std::string& s, const std::string& where) {
  if (s == "assigned") return {};
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  ClusteringOutcome o;
  if (kind == "created") o.kind = ClusteringOutcome::Kind::created;
  else if (kind == "replaced") o.kind = ClusteringOutcome::Kind::center_replaced;
  else throw Error(kCode, where + ": bad outcome \"" + s + "\"");
  if (colon == std::string::npos) throw Error(kCode, where + ": outcome without cluster id");
  o.id = static_cast<ClusterId>(parse_int(s.substr(colon + 1), where));
  return o;
}

constexpr const char* kHeader =
    "step,time,s,v_f,v_p,u_f,action_index,argmax_state,outcome,n_states,recognized,predicted";

json optional_step(const std::optional<std::size_t>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

void write_run_csv(const RunLog& log, std::ostream& out) {
  out << kHeader << '\n';
  for (const RunRecord& r : log.records) {
    out << r.step << ',' << num(r.time) << ',' << num(r.headway) << ',' << num(r.v_follower) << ','
        << num(r.v_preceding) << ',' << num(r.u_follower) << ',' << r.action << ','
        << (r.recognized.size() ? r.recognized.argmax() + 1 : 0) << ',' << outcome_text(r.outcome)
        << ',' << r.state_count << ',' << joined(r.recognized.probs) << ','
        << joined(r.predicted.probs) << '\n';
  }
}

std::string run_summary_json(const RunLog& log) {
  json j;
  j["name"] = log.name;
  j["case"] = log.case_id;
  j["terminal"] = to_string(log.terminal);
  j["ticks"] = log.records.size();
  j["collision_step"] = optional_step(log.collision_step);
  j["brake_step"] = optional_step(log.brake_step);
  json counts = json::array();
  std::size_t last = 0;
  for (const RunRecord& r : log.records) {
    if (counts.empty() || r.state_count != last) counts.push_back({r.step, r.state_count});
    last = r.state_count;
  }
  j["state_count"] = counts;
  j["initial_prediction"] = log.initial_prediction.probs;
  return j.dump(2) + "\n";
}

void save_run(const RunLog& log, const std::string& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base = std::filesystem::path(dir) / stem;
  std::ostringstream csv;
  write_run_csv(log, csv);
  detail::write_text_file(base.string() + ".csv", csv.str());
  detail::write_text_file(base.string() + ".json", run_summary_json(log));
}

RunLog load_run(const std::string& dir, const std::string& stem) {
  const std::filesystem::path base = std::filesystem::path(dir) / stem;
  const std::string json_path = base.string() + ".json";
  const std::string csv_path = base.string() + ".csv";

  RunLog log;
  const json j = detail::parse_text(detail::read_text_file(json_path, kCode), json_path, kCode);
  detail::ObjectReader r(j, "", kCode);
  r.get("name", log.name);
  r.get("case", log.case_id);
  std::string terminal;
  r.get("terminal", terminal);
  if (terminal == "collision") log.terminal = RunLog::Terminal::collision;
  else if (terminal == "horizon_reached") log.terminal = RunLog::Terminal::horizon_reached;
  else throw Error(kCode, json_path + ": bad terminal \"" + terminal + "\"");
  for (const char* key : {"collision_step", "brake_step"}) {
    const json* v = r.find(key);
    if (v && !v->is_null()) {
      std::size_t s = 0;
      r.get(key, s);
      (std::string(key) == "collision_step" ? log.collision_step : log.brake_step) = s;
    }
  }
  r.get("initial_prediction", log.initial_prediction.probs);
  r.find("ticks");
  r.find("state_count");
  r.finish();

  std::istringstream in(detail::read_text_file(csv_path, kCode));
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error(kCode, csv_path + ": unexpected header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = csv_path + ":" + std::to_string(lineno);
    const auto f = split(line, ',');
    if (f.size() != 12) throw Error(kCode, where + ": expected 12 fields");
    RunRecord rec;
    rec.step = static_cast<std::size_t>(parse_int(f[0], where));
    rec.time = parse_double(f[1], where);
    rec.headway = parse_double(f[2], where);
    rec.v_follower = parse_double(f[3], where);
    rec.v_preceding = parse_double(f[4], where);
    rec.u_follower = parse_double(f[5], where);
    rec.action = static_cast<int>(parse_int(f[6], where));
    rec.outcome = parse_outcome(f[8], where);
    rec.state_count = static_cast<std::size_t>(parse_int(f[9], where));
    rec.recognized.probs = parse_probs(f[10], where);
    rec.predicted.probs = parse_probs(f[11], where);
    log.records.push_back(std::move(rec));
  }
  return log;
}

}  // namespace efsm::sim
