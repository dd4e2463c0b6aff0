#pragma once

#include "sphere_game/kinematics.hpp"
#include "sphere_game/sphere_geom.hpp"

namespace sphere_game {

/// Capture time under equilibrium play, R alpha / ((1 - mu) v_P).
/// Throws std::invalid_argument for alpha outside [0, pi].
double value(double alpha, const GameParams& params);

/// Equilibrium feedback for alpha in (0, pi]: pure pursuit and pure flight at
/// full speed on the interior, the dispersal action at alpha = pi.
/// Throws std::invalid_argument when the agents are already collocated.
ControlInput equilibrium_controls(const RelativeConfig& config, const GameParams& params,
                                  double tie_break = 0.0);

/// Instantaneous rate-of-loss of the evader when both players commit
/// (v_E, u_E) and u_P = 0 for a vanishing hold time at alpha = pi:
/// (mu - (v_E / v_P) cos u_E) / (1 - mu). Non-negative for admissible v_E.
double rate_of_loss(double v_E, double u_E, const GameParams& params);

/// Dispersal action at alpha = pi. The pursuer may pick any heading; we use
/// `tie_break`. The evader holds still; its heading is recorded as 0.
ControlInput dispersal_controls(double tie_break, const GameParams& params);

/// World-frame realisation of the dispersal heading at P: the projection of
/// +x onto the tangent plane (or +y when P lies on the x axis), rotated about
/// P by `tie_break`.
Vec3 dispersal_direction(const SurfacePoint& P, double tie_break);

}  // namespace sphere_game
