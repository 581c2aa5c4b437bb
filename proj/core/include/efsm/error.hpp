#pragma once

#include <stdexcept>
#include <string>

namespace efsm {

enum class Errc {
  invalid_observation,
  no_states,
  dimension_mismatch,
  action_out_of_range,
  internal_inconsistency,
  non_simplex,
  collision_state,
  config_error,
  config_mismatch,
  snapshot_error,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers (the CLI in
/// particular) which failure class occurred.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace efsm
