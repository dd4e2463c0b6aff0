#pragma once

// Great-circle geometry on a round sphere of radius R.
//
// Conventions: for a pair (P, E) the great-circle normal is n = P x E / |P x E|.
// At either endpoint X the reference tangent is t_X = n x X/|X|, i.e. the
// direction of positive rotation about n. At the pursuer t_P points toward the
// evader; at the evader t_E points away from the pursuer. A heading u is measured
// from t_X toward n.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>

namespace sphere_game {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Sine of the separation below which the great circle through two points is
/// considered undefined.
inline constexpr double kDegenerateSine = 1e-9;

/// Global constants of one engagement.
struct GameParams {
  double R = 1.0;    ///< sphere radius
  double v_P = 1.0;  ///< pursuer speed
  double mu = 0.5;   ///< evader max speed / pursuer speed, in (0, 1)

  /// Validating factory; throws std::invalid_argument.
  static GameParams make(double R, double v_P, double mu);

  double max_evader_speed() const { return mu * v_P; }

  bool operator==(const GameParams&) const = default;
};

/// A point on the sphere. Construction projects onto the radius, so
/// |position()| == radius() up to rounding.
class SurfacePoint {
 public:
  SurfacePoint(const Vec3& position, double radius);

  const Vec3& position() const { return position_; }
  double radius() const { return radius_; }
  Vec3 unit() const { return position_ / radius_; }

  double x() const { return position_.x(); }
  double y() const { return position_.y(); }
  double z() const { return position_.z(); }

  bool operator==(const SurfacePoint& other) const {
    return radius_ == other.radius_ && position_ == other.position_;
  }

 private:
  Vec3 position_;
  double radius_;
};

/// Orthonormal directions attached to the great circle through P and E.
/// n is orthogonal to t_P and t_E; t_P . t_E = cos(alpha).
struct GreatCircleFrame {
  Vec3 n;
  Vec3 t_P;
  Vec3 t_E;
};

struct RelativeConfig {
  double alpha = 0.0;  ///< angular distance in [0, pi]
  std::optional<GreatCircleFrame> frame;
  bool degenerate = true;

  /// Frame accessor that throws std::invalid_argument on degenerate configurations.
  const GreatCircleFrame& require_frame() const;
};

/// Latitude phi, longitude theta (radians).
SurfacePoint from_spherical(double phi, double theta, const GameParams& params);
SurfacePoint from_spherical(double phi, double theta, double radius);

/// Angle between two nonzero vectors, accurate near 0 and pi.
double central_angle(const Vec3& a, const Vec3& b);

/// Geodesic (great-circle) distance between two points on the same sphere.
double arc_length(const SurfacePoint& a, const SurfacePoint& b);

RelativeConfig relative_config(const SurfacePoint& P, const SurfacePoint& E);

/// Moves X a distance `arc` along the great circle leaving X in direction `dir`.
/// `dir` must be a unit vector tangent at X; throws std::invalid_argument otherwise.
SurfacePoint step_geodesic(const SurfacePoint& X, const Vec3& dir, double arc);

/// Parallel-transported direction after step_geodesic(X, dir, arc).
Vec3 transported_direction(const SurfacePoint& X, const Vec3& dir, double arc);

/// speed * (cos u * t_X + sin u * n) with t_X = n x X/R. Throws
/// std::invalid_argument when the configuration is degenerate.
Vec3 heading_to_velocity(const SurfacePoint& X, const RelativeConfig& config, double u,
                         double speed);

/// Inverse of heading_to_velocity for a tangent direction at X, in [0, 2pi).
double heading_of(const SurfacePoint& X, const RelativeConfig& config, const Vec3& tangent);

/// Component of v orthogonal to X, normalised. Throws if v is parallel to X.
Vec3 tangent_toward(const SurfacePoint& X, const Vec3& v);

/// Wraps to [0, 2pi).
double wrap_two_pi(double angle);
/// Wraps to [-pi, pi).
double wrap_pi(double angle);

}  // namespace sphere_game
