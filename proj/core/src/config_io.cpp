#include "efsm/config_io.hpp"

#include <algorithm>
#include <cctype>

#include "config_json.hpp"

namespace efsm {

namespace {

using detail::json;

// Resolved defaults. Indexed overrides into an array the input lacks
// (experiment.cases.0.repetitions) start from the default array.
const json& default_document() {
  static const json doc = json::parse(to_json(parse_settings("{}")));
  return doc;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw Error(Errc::config_error, "override \"" + assignment + "\": expected key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  json* node = &doc;
  const json* fallback = &default_document();
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (part.empty()) throw Error(Errc::config_error, "override \"" + key + "\": empty path segment");
    if (node->is_array()) {
      const bool numeric =
          std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); });
      const std::size_t index = numeric ? std::stoul(part) : node->size();
      if (!numeric || index >= node->size())
        throw Error(Errc::config_error, "override \"" + key + "\": no element " + part);
      node = &(*node)[index];
      fallback = fallback && fallback->is_array() && index < fallback->size() ? &(*fallback)[index] : nullptr;
    } else {
      if (node->is_null()) *node = json::object();
      if (!node->is_object())
        throw Error(Errc::config_error, "override \"" + key + "\": " + part + " is not inside an object");
      const json* def = fallback && fallback->is_object() && fallback->contains(part) ? &(*fallback)[part] : nullptr;
      if (!node->contains(part) && def && def->is_array()) (*node)[part] = *def;
      node = &(*node)[part];
      fallback = def;
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = std::move(value);
}

}  // namespace

Settings parse_settings(const std::string& text, std::span<const std::string> overrides) {
  json doc = detail::parse_text(text, "config", Errc::config_error);
  if (!doc.is_object()) throw Error(Errc::config_error, "config: expected a JSON object");
  for (const std::string& o : overrides) apply_override(doc, o);

  detail::ObjectReader r(doc, "", Errc::config_error);
  Settings s;
  if (const json* m = r.find("model")) s.model = detail::model_from_json(*m, "model", Errc::config_error);
  s.model.validate();
  if (const json* sc = r.find("scenario"))
    s.scenario = detail::scenario_from_json(*sc, "scenario", Errc::config_error);
  if (const json* p = r.find("experiment"))
    s.plan = detail::plan_from_json(*p, "experiment", Errc::config_error);
  else
    s.plan = eval::default_plan();
  s.plan.model = s.model;
  r.finish();
  return s;
}

Settings load_settings(const std::optional<std::string>& path, std::span<const std::string> overrides) {
  const std::string text = path ? detail::read_text_file(*path, Errc::config_error) : "{}";
  return parse_settings(text, overrides);
}

std::string to_json(const Settings& s) {
  json doc;
  doc["model"] = detail::to_json(s.model);
  doc["scenario"] = detail::to_json(s.scenario);
  doc["experiment"] = detail::to_json(s.plan);
  return doc.dump(2) + "\n";
}

}  // namespace efsm
