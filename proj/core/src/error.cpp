#include "efsm/error.hpp"

namespace efsm {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_observation: return "invalid observation";
    case Errc::no_states: return "no states";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::action_out_of_range: return "action out of range";
    case Errc::internal_inconsistency: return "internal inconsistency";
    case Errc::non_simplex: return "not a probability distribution";
    case Errc::collision_state: return "collision state";
    case Errc::config_error: return "configuration error";
    case Errc::config_mismatch: return "configuration mismatch";
    case Errc::snapshot_error: return "snapshot error";
  }
  return "unknown error";
}

}  // namespace efsm
