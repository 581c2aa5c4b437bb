#pragma once

#include <iosfwd>
#include <string>

#include "efsm/sim/run_log.hpp"

namespace efsm::sim {

/// One row per tick:
///   step,time,s,v_f,v_p,u_f,action_index,argmax_state,outcome,n_states,recognized,predicted
/// Numbers use 12 significant digits; probability vectors are ';'-separated.
/// `outcome` is "created:<id>", "replaced:<id>" or "assigned"; argmax_state
/// is a 1-based cluster id.
void write_run_csv(const RunLog& log, std::ostream& out);

/// Terminal event, collision and brake steps, state count over time and the
/// uniform-prior first prediction.
std::string run_summary_json(const RunLog& log);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json.
void save_run(const RunLog& log, const std::string& dir, const std::string& stem);

/// Reads back what save_run wrote. Values carry the CSV's 12-digit precision.
/// Throws Errc::config_error on malformed files.
RunLog load_run(const std::string& dir, const std::string& stem);

}  // namespace efsm::sim
