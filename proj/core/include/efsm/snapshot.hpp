#pragma once

#include <string>

#include "efsm/model.hpp"

namespace efsm {

/// Versioned JSON snapshot of a model: configuration, accumulators, clusters,
/// every action's stored F / F_o / row exponents, the last estimate and the
/// next cluster id. Doubles are written with round-trip precision, so
/// load(save(m)) == m.
inline constexpr const char* kSnapshotFormat = "efsm-model";
inline constexpr int kSnapshotVersion = 1;

std::string snapshot_to_json(const EfsmModel& model);

/// Throws Errc::snapshot_error on malformed input, a different format or
/// version, or parts that contradict each other.
EfsmModel snapshot_from_json(const std::string& text);

void save_snapshot(const EfsmModel& model, const std::string& path);
EfsmModel load_snapshot(const std::string& path);

}  // namespace efsm
