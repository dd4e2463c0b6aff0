#include "sphere_game/strategies.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphere_game {

double value(double alpha, const GameParams& params) {
  if (!(alpha >= 0.0 && alpha <= kPi)) {
    throw std::invalid_argument("angular distance outside [0, pi]: " + std::to_string(alpha));
  }
  return params.R * alpha / ((1.0 - params.mu) * params.v_P);
}

ControlInput equilibrium_controls(const RelativeConfig& config, const GameParams& params,
                                  double tie_break) {
  if (config.degenerate) {
    if (config.alpha < 0.5 * kPi) {
      throw std::invalid_argument("agents are collocated; the game is over");
    }
    return dispersal_controls(tie_break, params);
  }
  return ControlInput{0.0, 0.0, params.max_evader_speed()};
}

double rate_of_loss(double v_E, double u_E, const GameParams& params) {
  if (!(v_E >= 0.0 && v_E <= params.max_evader_speed() * (1.0 + 1e-12))) {
    throw std::invalid_argument("evader speed outside [0, mu v_P]: " + std::to_string(v_E));
  }
  return (params.mu - v_E / params.v_P * std::cos(u_E)) / (1.0 - params.mu);
}

ControlInput dispersal_controls(double tie_break, const GameParams& /*params*/) {
  return ControlInput{tie_break, 0.0, 0.0};
}

Vec3 dispersal_direction(const SurfacePoint& P, double tie_break) {
  const Vec3 p = P.unit();
  Vec3 reference = Vec3::UnitX() - p.x() * p;
  if (reference.norm() < 1e-6) {
    reference = Vec3::UnitY() - p.y() * p;
  }
  reference.normalize();
  const Vec3 side = p.cross(reference);
  return (std::cos(tie_break) * reference + std::sin(tie_break) * side).normalized();
}

}  // namespace sphere_game
