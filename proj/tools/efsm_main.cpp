#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace efsm::cli;
  CLI::App app{"e-FSM: evolving finite state machine for car-following data"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_config) {
    if (with_config) {
      sub->add_option("--config", o.config, "JSON configuration file")->check(CLI::ExistingFile);
      sub->add_option("--set", o.overrides, "Override a config value, e.g. model.phi=0.2")
          ->expected(1)
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    }
    sub->add_flag("--quiet", o.quiet, "Suppress the summary on stdout");
  };

  auto* run = app.add_subcommand("run", "Simulate one scenario and train the model");
  common(run, true);
  run->add_option("--model-in", o.model_in, "Continue from this snapshot");
  run->add_option("--model-out", o.model_out, "Snapshot path (default <out>/model.json)");
  run->add_option("--out", o.out, "Output directory");

  auto* exp = app.add_subcommand("experiment", "Run the multi-case training experiment");
  common(exp, true);
  exp->add_option("--model-in", o.model_in, "Continue from this snapshot");
  exp->add_option("--model-out", o.model_out, "Snapshot path (default <out>/model.json)");
  exp->add_option("--out", o.out, "Output directory");

  auto* ev = app.add_subcommand("eval", "Recompute the report from logs written by experiment");
  common(ev, false);
  ev->add_option("logs", o.logs, "Experiment output directory")->required();
  ev->add_option("--out", o.out, "Report directory");

  auto* exm = app.add_subcommand("export-model", "Write a model snapshot");
  common(exm, true);
  exm->add_option("--model-in", o.model_in, "Re-export this snapshot");
  exm->add_option("--model-out", o.model_out, "Snapshot path")->required();

  auto* ins = app.add_subcommand("inspect", "Summarize a snapshot and audit its row sums");
  common(ins, false);
  ins->add_option("snapshot,--model-in", o.model_in, "Snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  auto dispatch = [&]() -> int {
    if (*run) return cmd_run(o, std::cout);
    if (*exp) return cmd_experiment(o, std::cout);
    if (*ev) return cmd_eval(o, std::cout);
    if (*exm) return cmd_export_model(o, std::cout);
    return cmd_inspect(o, std::cout);
  };
  return guarded(dispatch, std::cerr);
}
