#include "sphere_game/errors.hpp"
#include "sphere_game/execute.hpp"
#include "sphere_game/scenario.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <array>
#include <iostream>
#include <string>

namespace sg = sphere_game;

int main(int argc, char** argv) {
  CLI::App app{"Pursuit-evasion on a sphere: playouts, dominance regions and engagements"};
  app.require_subcommand(1);

  struct Target {
    sg::Mode mode;
    const char* name;
    const char* help;
  };
  const std::array<Target, 5> targets{{
      {sg::Mode::simulate, "simulate", "Equilibrium playout; writes trajectory CSV and JSON"},
      {sg::Mode::apollonius, "apollonius", "Evader dominance boundary and intercept record"},
      {sg::Mode::intercept, "intercept", "One-on-one intercept record with classification"},
      {sg::Mode::two_pursuer, "two-pursuer", "Two-pursuer intercept and both boundaries"},
      {sg::Mode::guard, "guard", "Target-guarding verdict and optional playouts"},
  }};

  std::string scenario_path;
  std::string out_dir;
  for (const Target& t : targets) {
    CLI::App* sub = app.add_subcommand(t.name, t.help);
    sub->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    sub->add_option("outdir", out_dir, "Output directory (created if missing)")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sg::kExitSuccess : sg::kExitUsage;
  }

  const Target* chosen = nullptr;
  for (const Target& t : targets) {
    if (app.got_subcommand(t.name)) chosen = &t;
  }

  sg::Scenario scenario;
  try {
    scenario = sg::load_scenario(scenario_path);
  } catch (const sg::ParseError& e) {
    fmt::print(stderr, "error: {}: {}\n", scenario_path, e.what());
    return sg::kExitUsage;
  }
  if (scenario.mode != chosen->mode) {
    fmt::print(stderr, "error: {} is a '{}' scenario, not '{}'\n", scenario_path,
               sg::to_string(scenario.mode), chosen->name);
    return sg::kExitUsage;
  }

  const sg::ExecutionResult result = sg::execute(scenario, out_dir);
  if (result.exit_code != sg::kExitSuccess) {
    fmt::print(stderr, "error: {}\n", result.message);
    return result.exit_code;
  }
  for (const auto& path : result.files) {
    fmt::print("{}\n", path.string());
  }
  return sg::kExitSuccess;
}
