#pragma once

#include <string>

#include "efsm/eval/experiment.hpp"

namespace efsm::eval {

std::string report_to_json(const EvalReport& report);

/// Per-tick JSD series of one run: "tick,jsd".
std::string jsd_csv(const RunSummary& run);

/// Long format for plotting tools: "run,tick,metric,value" with metrics
/// jsd (every tick) and state_count (one row per run, at its last tick).
std::string plot_csv(const EvalReport& report);

/// Writes <dir>/report.json, <dir>/plot.csv and <dir>/jsd/run_NNN.csv.
void write_report(const EvalReport& report, const std::string& dir);

/// "run_001" style file stem for the 1-based run index.
std::string run_stem(std::size_t run_index);

}  // namespace efsm::eval
