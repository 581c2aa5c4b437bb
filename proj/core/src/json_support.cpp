#include "json_support.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace efsm::detail {

ObjectReader::ObjectReader(const json& j, std::string path, Errc code)
    : j_(j), path_(std::move(path)), code_(code) {
  if (!j_.is_object())
    throw Error(code_, (path_.empty() ? std::string("document") : path_) + ": expected an object");
}

const json* ObjectReader::find(const char* key) {
  seen_.insert(key);
  auto it = j_.find(key);
  return it == j_.end() ? nullptr : &*it;
}

const json& ObjectReader::require(const char* key) {
  const json* v = find(key);
  if (!v) fail(key, "missing required key");
  return *v;
}

void ObjectReader::get(const char* key, double& out) {
  if (const json* v = find(key)) out = as_double(*v, child(key), code_);
}

void ObjectReader::get(const char* key, int& out) {
  if (const json* v = find(key)) {
    const long long x = as_integer(*v, child(key), code_);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
      fail(key, "integer out of range");
    out = static_cast<int>(x);
  }
}

void ObjectReader::get(const char* key, std::size_t& out) {
  if (const json* v = find(key)) {
    const long long x = as_integer(*v, child(key), code_);
    if (x < 0) fail(key, "must be non-negative");
    out = static_cast<std::size_t>(x);
  }
}

void ObjectReader::get(const char* key, std::string& out) {
  if (const json* v = find(key)) {
    if (!v->is_string()) fail(key, "expected a string");
    out = v->get<std::string>();
  }
}

void ObjectReader::get(const char* key, Vector& out) {
  if (const json* v = find(key)) out = as_vector(*v, child(key), code_);
}

void ObjectReader::fail(const std::string& key, const std::string& msg) const {
  throw Error(code_, child(key) + ": " + msg);
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!seen_.count(it.key())) fail(it.key(), "unknown key");
}

double as_double(const json& j, const std::string& path, Errc code) {
  if (!j.is_number()) throw Error(code, path + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(code, path + ": must be finite");
  return x;
}

long long as_integer(const json& j, const std::string& path, Errc code) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9e15)
      return static_cast<long long>(x);
  }
  throw Error(code, path + ": expected an integer");
}

Vector as_vector(const json& j, const std::string& path, Errc code) {
  if (!j.is_array()) throw Error(code, path + ": expected an array of numbers");
  Vector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_double(j[i], path + "[" + std::to_string(i) + "]", code));
  return out;
}

json parse_text(const std::string& text, const std::string& what, Errc code) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Report a line number as well as the byte offset.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw Error(code, what + ": line " + std::to_string(line) + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path, Errc code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(code, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::config_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::config_error, "failed writing " + path);
}

}  // namespace efsm::detail
