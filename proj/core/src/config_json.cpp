#include "config_json.hpp"

#include <string>

namespace efsm::detail {

const char* to_string(AssignmentRule rule) noexcept {
  return rule == AssignmentRule::max_similarity ? "max_similarity" : "nearest_center";
}

const char* to_string(eval::RunOrder order) noexcept {
  return order == eval::RunOrder::interleaved ? "interleaved" : "blocked";
}

json to_json(const ModelConfig& m) {
  json j;
  j["dimension"] = m.dimension;
  j["rho"] = m.rho;
  j["eps"] = m.eps;
  j["phi"] = m.phi;
  j["eps_bar"] = m.eps_bar;
  j["spread_floor"] = m.spread_floor;
  j["action_lo"] = m.action_lo;
  j["action_hi"] = m.action_hi;
  j["action_width"] = m.action_width;
  j["assignment"] = to_string(m.assignment);
  j["normalization"] = {{"offset", m.normalization.offset}, {"scale", m.normalization.scale}};
  return j;
}

json to_json(const sim::IdmParams& p) {
  return {{"a_max", p.a_max}, {"v0", p.v0}, {"s0", p.s0},
          {"T", p.T},         {"b_comf", p.b_comf}, {"delta", p.delta_exp}};
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const sim::ScenarioConfig& s) {
  json j;
  j["name"] = s.name;
  j["case"] = s.case_id;
  j["dt"] = s.dt;
  j["horizon_steps"] = s.horizon_steps;
  j["initial_gap"] = s.initial_gap;
  j["follower"] = to_json(s.follower_initial);
  j["follower_after"] = to_json(s.follower_after);
  j["switch_time"] = optional_number(s.switch_time);
  j["preceding"] = to_json(s.preceding);
  j["action_lo"] = s.action_bounds.lo;
  j["action_hi"] = s.action_bounds.hi;
  j["brake_decel"] = s.brake_decel;
  j["leader_max_speed"] = s.leader_max_speed;
  j["forced_brake_time"] = optional_number(s.forced_brake_time);
  return j;
}

json to_json(const eval::ExperimentPlan& plan) {
  json cases = json::array();
  for (const eval::CaseEntry& c : plan.cases)
    cases.push_back({{"scenario", to_json(c.scenario)}, {"repetitions", c.repetitions}});
  json probes = json::array();
  for (const sim::ScenarioConfig& p : plan.probes) probes.push_back(to_json(p));
  return {{"order", to_string(plan.order)}, {"cases", cases}, {"probes", probes}};
}

ModelConfig model_from_json(const json& j, const std::string& path, Errc code,
                            const ModelConfig& base) {
  ObjectReader r(j, path, code);
  ModelConfig m = base;
  r.get("dimension", m.dimension);
  r.get("rho", m.rho);
  r.get("eps", m.eps);
  r.get("phi", m.phi);
  r.get("eps_bar", m.eps_bar);
  r.get("spread_floor", m.spread_floor);
  r.get("action_lo", m.action_lo);
  r.get("action_hi", m.action_hi);
  r.get("action_width", m.action_width);
  if (const json* a = r.find("assignment")) {
    if (*a == "max_similarity") m.assignment = AssignmentRule::max_similarity;
    else if (*a == "nearest_center") m.assignment = AssignmentRule::nearest_center;
    else r.fail("assignment", "expected \"max_similarity\" or \"nearest_center\"");
  }
  if (const json* n = r.find("normalization")) {
    ObjectReader nr(*n, r.child("normalization"), code);
    nr.get("offset", m.normalization.offset);
    nr.get("scale", m.normalization.scale);
    nr.finish();
  }
  r.finish();
  return m;
}

sim::IdmParams idm_from_json(const json& j, const std::string& path, Errc code,
                             const sim::IdmParams& base) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "aggressive") return sim::aggressive_preset();
    if (name == "normal") return sim::normal_preset();
    if (name == "preceding") return sim::preceding_preset();
    throw Error(code, path + ": unknown preset \"" + name +
                          "\" (expected aggressive, normal or preceding)");
  }
  ObjectReader r(j, path, code);
  sim::IdmParams p = base;
  r.get("a_max", p.a_max);
  r.get("v0", p.v0);
  r.get("s0", p.s0);
  r.get("T", p.T);
  r.get("b_comf", p.b_comf);
  r.get("delta", p.delta_exp);
  r.finish();
  return p;
}

namespace {

void get_optional(ObjectReader& r, const char* key, std::optional<double>& out) {
  if (const json* v = r.find(key)) {
    if (v->is_null()) out.reset();
    else out = as_double(*v, r.child(key), r.code());
  }
}

}  // namespace

sim::ScenarioConfig scenario_from_json(const json& j, const std::string& path, Errc code) {
  ObjectReader r(j, path, code);
  sim::ScenarioConfig s;
  if (const json* c = r.find("case")) {
    const long long id = as_integer(*c, r.child("case"), code);
    if (id < 1 || id > 4) r.fail("case", "must be 1..4");
    s = sim::standard_case(static_cast<int>(id));
  }
  r.get("name", s.name);
  r.get("dt", s.dt);
  r.get("horizon_steps", s.horizon_steps);
  r.get("initial_gap", s.initial_gap);
  if (const json* f = r.find("follower")) {
    s.follower_initial = idm_from_json(*f, r.child("follower"), code, s.follower_initial);
    // Without an explicit switch the follower keeps one parameter set.
    if (!r.find("follower_after") && !r.find("switch_time")) s.follower_after = s.follower_initial;
  }
  if (const json* f = r.find("follower_after"))
    s.follower_after = idm_from_json(*f, r.child("follower_after"), code, s.follower_after);
  get_optional(r, "switch_time", s.switch_time);
  if (const json* p = r.find("preceding"))
    s.preceding = idm_from_json(*p, r.child("preceding"), code, s.preceding);
  r.get("action_lo", s.action_bounds.lo);
  r.get("action_hi", s.action_bounds.hi);
  r.get("brake_decel", s.brake_decel);
  r.get("leader_max_speed", s.leader_max_speed);
  get_optional(r, "forced_brake_time", s.forced_brake_time);
  r.finish();
  if (code == Errc::config_error) {
    s.validate();
  } else {
    try {
      s.validate();
    } catch (const Error& e) {
      throw Error(code, path + ": invalid scenario (" + e.what() + ")");
    }
  }
  return s;
}

eval::ExperimentPlan plan_from_json(const json& j, const std::string& path, Errc code) {
  ObjectReader r(j, path, code);
  eval::ExperimentPlan plan = eval::default_plan();
  if (const json* o = r.find("order")) {
    if (*o == "interleaved") plan.order = eval::RunOrder::interleaved;
    else if (*o == "blocked") plan.order = eval::RunOrder::blocked;
    else r.fail("order", "expected \"interleaved\" or \"blocked\"");
  }
  if (const json* cases = r.find("cases")) {
    if (!cases->is_array() || cases->empty()) r.fail("cases", "expected a non-empty array");
    plan.cases.clear();
    for (std::size_t i = 0; i < cases->size(); ++i) {
      const std::string p = r.child("cases") + "." + std::to_string(i);
      ObjectReader cr((*cases)[i], p, code);
      eval::CaseEntry entry;
      entry.scenario = scenario_from_json(cr.require("scenario"), cr.child("scenario"), code);
      cr.get("repetitions", entry.repetitions);
      if (entry.repetitions < 1) cr.fail("repetitions", "must be >= 1");
      cr.finish();
      plan.cases.push_back(std::move(entry));
    }
  }
  if (const json* probes = r.find("probes")) {
    if (!probes->is_array()) r.fail("probes", "expected an array");
    plan.probes.clear();
    for (std::size_t i = 0; i < probes->size(); ++i)
      plan.probes.push_back(
          scenario_from_json((*probes)[i], r.child("probes") + "." + std::to_string(i), code));
  }
  r.finish();
  return plan;
}

}  // namespace efsm::detail
