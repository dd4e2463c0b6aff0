#pragma once

#include "sphere_game/kinematics.hpp"
#include "sphere_game/sphere_geom.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace sphere_game {

inline constexpr double kDefaultCaptureTolerance = 1e-3;

/// Full state visible to both players.
struct GameState {
  double t;
  SurfacePoint P;
  SurfacePoint E;
  RelativeConfig config;
};

struct EvaderControl {
  double u_E = 0.0;
  double v_E = 0.0;
};

using EvaderPolicy = std::function<EvaderControl(const GameState&)>;
/// The pursuer observes the evader's current control as well (perfect information).
using PursuerPolicy = std::function<double(const GameState&, const EvaderControl&)>;

PursuerPolicy equilibrium_pursuer();
EvaderPolicy equilibrium_evader(const GameParams& params);

struct RunOptions {
  double dt = 1e-3;
  /// Defaults to 4 value(pi) when unset.
  std::optional<double> max_time;
  double capture_tolerance = kDefaultCaptureTolerance;
  /// Pursuer heading used at alpha = pi, see dispersal_direction().
  double tie_break = 0.0;
};

struct TrajectoryStep {
  double t;
  SurfacePoint P;
  SurfacePoint E;
  double alpha;
  /// Control applied from this state on; for the terminal record, the last applied control.
  ControlInput ctrl;
};

struct Trajectory {
  double dt = 0.0;
  double capture_tolerance = kDefaultCaptureTolerance;
  double tie_break = 0.0;
  std::vector<TrajectoryStep> steps;  ///< includes the initial state
  std::optional<double> capture_time;
  bool capped = false;

  std::size_t step_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Plays the game from (P0, E0) until the separation drops to the capture
/// tolerance (detected inside a step, with the crossing time located by
/// bisection) or max_time is reached. At alpha = pi both policies are bypassed
/// for one step: the evader stands still and the pursuer leaves along the
/// tie-break direction.
///
/// Throws InadmissibleControl when the evader policy exceeds its speed bound and
/// std::invalid_argument for dt <= 0.
Trajectory run(const SurfacePoint& P0, const SurfacePoint& E0, const PursuerPolicy& pursuer,
               const EvaderPolicy& evader, const RunOptions& options, const GameParams& params);

}  // namespace sphere_game
