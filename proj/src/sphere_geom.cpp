#include "sphere_game/sphere_geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sphere_game {

GameParams GameParams::make(double R, double v_P, double mu) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw std::invalid_argument("sphere radius must be positive, got " + std::to_string(R));
  }
  if (!(v_P > 0.0) || !std::isfinite(v_P)) {
    throw std::invalid_argument("pursuer speed must be positive, got " + std::to_string(v_P));
  }
  if (!(mu > 0.0 && mu < 1.0)) {
    throw std::invalid_argument("speed ratio must lie in (0, 1), got " + std::to_string(mu));
  }
  return GameParams{R, v_P, mu};
}

SurfacePoint::SurfacePoint(const Vec3& position, double radius) : radius_(radius) {
  const double norm = position.norm();
  if (!(radius > 0.0) || !(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot place a zero or non-finite vector on the sphere");
  }
  position_ = position * (radius / norm);
}

const GreatCircleFrame& RelativeConfig::require_frame() const {
  if (degenerate || !frame) {
    throw std::invalid_argument("great circle undefined for alpha = " + std::to_string(alpha));
  }
  return *frame;
}

SurfacePoint from_spherical(double phi, double theta, double radius) {
  const double c = std::cos(phi);
  return SurfacePoint(Vec3(radius * c * std::cos(theta), radius * c * std::sin(theta),
                           radius * std::sin(phi)),
                      radius);
}

SurfacePoint from_spherical(double phi, double theta, const GameParams& params) {
  return from_spherical(phi, theta, params.R);
}

double central_angle(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double arc_length(const SurfacePoint& a, const SurfacePoint& b) {
  return a.radius() * central_angle(a.position(), b.position());
}

RelativeConfig relative_config(const SurfacePoint& P, const SurfacePoint& E) {
  if (std::abs(P.radius() - E.radius()) > 1e-9 * P.radius()) {
    throw std::invalid_argument("points lie on spheres of different radius");
  }
  const Vec3 p = P.unit();
  const Vec3 e = E.unit();
  const Vec3 cross = p.cross(e);
  const double sin_alpha = cross.norm();
  const double cos_alpha = std::clamp(p.dot(e), -1.0, 1.0);

  RelativeConfig config;
  config.alpha = std::atan2(sin_alpha, cos_alpha);
  if (sin_alpha < kDegenerateSine) {
    // Collocated or antipodal; snap so downstream checks see the exact cases.
    config.alpha = cos_alpha > 0.0 ? 0.0 : kPi;
    config.degenerate = true;
    return config;
  }
  GreatCircleFrame frame;
  frame.n = cross / sin_alpha;
  frame.t_P = frame.n.cross(p).normalized();
  frame.t_E = frame.n.cross(e).normalized();
  config.frame = frame;
  config.degenerate = false;
  return config;
}

namespace {

void require_tangent(const SurfacePoint& X, const Vec3& dir) {
  if (std::abs(dir.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("geodesic direction must be a unit vector");
  }
  if (std::abs(dir.dot(X.unit())) > 1e-10) {
    throw std::invalid_argument("geodesic direction is not tangent to the sphere");
  }
}

}  // namespace

SurfacePoint step_geodesic(const SurfacePoint& X, const Vec3& dir, double arc) {
  require_tangent(X, dir);
  if (arc < 0.0) {
    throw std::invalid_argument("geodesic step length must be non-negative");
  }
  if (arc == 0.0) {
    return X;
  }
  // Rotation by arc / R about X x dir; dir is orthogonal to X so Rodrigues'
  // formula collapses to the planar form.
  const double angle = arc / X.radius();
  const Vec3 moved = X.position() * std::cos(angle) + dir * (X.radius() * std::sin(angle));
  return SurfacePoint(moved, X.radius());
}

Vec3 transported_direction(const SurfacePoint& X, const Vec3& dir, double arc) {
  require_tangent(X, dir);
  const double angle = arc / X.radius();
  return (dir * std::cos(angle) - X.unit() * std::sin(angle)).normalized();
}

Vec3 heading_to_velocity(const SurfacePoint& X, const RelativeConfig& config, double u,
                         double speed) {
  const GreatCircleFrame& frame = config.require_frame();
  if (speed < 0.0) {
    throw std::invalid_argument("speed must be non-negative");
  }
  const Vec3 t = frame.n.cross(X.unit());
  return speed * (std::cos(u) * t + std::sin(u) * frame.n);
}

double heading_of(const SurfacePoint& X, const RelativeConfig& config, const Vec3& tangent) {
  const GreatCircleFrame& frame = config.require_frame();
  const Vec3 t = frame.n.cross(X.unit());
  return wrap_two_pi(std::atan2(tangent.dot(frame.n), tangent.dot(t)));
}

Vec3 tangent_toward(const SurfacePoint& X, const Vec3& v) {
  const Vec3 x = X.unit();
  const Vec3 t = v - v.dot(x) * x;
  const double norm = t.norm();
  if (!(norm > 1e-14 * v.norm())) {
    throw std::invalid_argument("vector has no tangential component at this point");
  }
  return t / norm;
}

double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) {
    a += kTwoPi;
  }
  return a >= kTwoPi ? 0.0 : a;
}

double wrap_pi(double angle) {
  double a = wrap_two_pi(angle + kPi) - kPi;
  return a >= kPi ? -kPi : a;
}

}  // namespace sphere_game
