#include "sphere_game/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace sphere_game {

bool is_admissible(const ControlInput& ctrl, const GameParams& params) {
  const double v_max = params.max_evader_speed();
  return std::isfinite(ctrl.v_E) && ctrl.v_E >= 0.0 && ctrl.v_E <= v_max * (1.0 + 1e-12) &&
         std::isfinite(ctrl.u_E) && std::isfinite(ctrl.u_P);
}

double alpha_rate(const ControlInput& ctrl, const GameParams& params) {
  return ctrl.v_E / params.R * std::cos(ctrl.u_E) - params.v_P / params.R * std::cos(ctrl.u_P);
}

AgentPositions advance_in_frame(const SurfacePoint& P, const SurfacePoint& E,
                                const RelativeConfig& config, const ControlInput& ctrl,
                                double dt, const GameParams& params) {
  if (dt < 0.0) {
    throw std::invalid_argument("time step must be non-negative");
  }
  if (!is_admissible(ctrl, params)) {
    throw std::invalid_argument("evader speed outside [0, mu v_P]");
  }
  const Vec3 p_dir = heading_to_velocity(P, config, ctrl.u_P, 1.0);
  const Vec3 e_dir = heading_to_velocity(E, config, ctrl.u_E, 1.0);
  return {step_geodesic(P, p_dir, params.v_P * dt), step_geodesic(E, e_dir, ctrl.v_E * dt)};
}

AgentPositions advance(const SurfacePoint& P, const SurfacePoint& E, const ControlInput& ctrl,
                       double dt, const GameParams& params) {
  const RelativeConfig config = relative_config(P, E);
  if (config.degenerate) {
    throw std::invalid_argument("advance needs a well-defined great circle; resolve alpha in {0, pi} first");
  }
  return advance_in_frame(P, E, config, ctrl, dt, params);
}

}  // namespace sphere_game
