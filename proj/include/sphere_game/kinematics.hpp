#pragma once

#include "sphere_game/sphere_geom.hpp"

#include <utility>

namespace sphere_game {

/// Headings are relative to the instantaneous great-circle frame.
struct ControlInput {
  double u_P = 0.0;  ///< pursuer heading
  double u_E = 0.0;  ///< evader heading
  double v_E = 0.0;  ///< evader speed, 0 <= v_E <= mu * v_P

  bool operator==(const ControlInput&) const = default;
};

/// True when 0 <= v_E <= mu v_P (with a relative rounding allowance).
bool is_admissible(const ControlInput& ctrl, const GameParams& params);

/// Rate of change of the angular distance for alpha in (0, pi).
double alpha_rate(const ControlInput& ctrl, const GameParams& params);

struct AgentPositions {
  SurfacePoint P;
  SurfacePoint E;
};

/// Moves both agents along the great circles of their instantaneous velocities
/// for a time dt. Throws std::invalid_argument on a degenerate configuration,
/// an inadmissible evader speed or dt < 0.
AgentPositions advance(const SurfacePoint& P, const SurfacePoint& E, const ControlInput& ctrl,
                       double dt, const GameParams& params);

/// advance() with the frame supplied by the caller, which must be the
/// non-degenerate relative_config of (P, E).
AgentPositions advance_in_frame(const SurfacePoint& P, const SurfacePoint& E,
                                const RelativeConfig& config, const ControlInput& ctrl,
                                double dt, const GameParams& params);

}  // namespace sphere_game
