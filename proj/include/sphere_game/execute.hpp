#pragma once

#include "sphere_game/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sphere_game {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct ExecutionResult {
  int exit_code = kExitSuccess;
  std::vector<std::filesystem::path> files;
  /// Error text when exit_code != 0.
  std::string message;
};

/// Runs one scenario and writes its artifacts into `out_dir` (created if
/// missing). Every run also writes the resolved scenario as scenario.json.
///
///   simulate     trajectory.csv, trajectory.json
///   apollonius   boundary.csv, intercept.json (or boundary_<i>.csv,
///                intercept_<i>.json per swept alpha)
///   intercept    intercept.json
///   two_pursuer  boundary_P1.csv, boundary_P2.csv, engagement.json
///   guard        boundary.csv, guard.json
///
/// NumericalBreakdown maps to exit 2, any other error to exit 1.
ExecutionResult execute(const Scenario& s, const std::filesystem::path& out_dir);

}  // namespace sphere_game
