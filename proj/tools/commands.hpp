#pragma once

#include <exception>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "efsm/error.hpp"

namespace efsm::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kMismatch = 3,
  kAuditFailure = 4,
};

struct Options {
  std::optional<std::string> config;
  std::optional<std::string> model_in;
  std::optional<std::string> model_out;
  std::string out = "out";
  std::vector<std::string> overrides;
  bool quiet = false;
  std::string logs;  // eval: directory written by `experiment`
};

int cmd_run(const Options& o, std::ostream& log);
int cmd_experiment(const Options& o, std::ostream& log);
int cmd_eval(const Options& o, std::ostream& log);
int cmd_export_model(const Options& o, std::ostream& log);
int cmd_inspect(const Options& o, std::ostream& log);

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::config_error:
    case Errc::snapshot_error: return kConfigError;
    case Errc::config_mismatch: return kMismatch;
    default: return kFailure;
  }
}

/// Runs `fn`, mapping library errors to exit codes and printing them to `err`.
template <class Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "efsm: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "efsm: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace efsm::cli
