#pragma once

// Internal helpers shared by the JSON readers and writers. Not installed.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "efsm/error.hpp"
#include "efsm/linalg.hpp"
#include "json.hpp"

namespace efsm::detail {

using json = nlohmann::json;

/// Walks one JSON object, tracking the dotted path for diagnostics and the
/// keys consumed so far. `finish()` rejects anything left over.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, Errc code);

  const std::string& path() const noexcept { return path_; }
  Errc code() const noexcept { return code_; }

  /// The member, or nullptr when absent. Marks the key as known.
  const json* find(const char* key);
  const json& require(const char* key);

  // Assign `out` when the key is present; leave it alone otherwise.
  void get(const char* key, double& out);
  void get(const char* key, int& out);
  void get(const char* key, std::size_t& out);
  void get(const char* key, std::string& out);
  void get(const char* key, Vector& out);

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const;

  void finish() const;

  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& j_;
  std::string path_;
  Errc code_;
  std::set<std::string> seen_;
};

double as_double(const json& j, const std::string& path, Errc code);
long long as_integer(const json& j, const std::string& path, Errc code);
Vector as_vector(const json& j, const std::string& path, Errc code);

/// Parses text, turning syntax errors into Error(code) with the byte offset.
json parse_text(const std::string& text, const std::string& what, Errc code);

std::string read_text_file(const std::string& path, Errc code);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace efsm::detail
