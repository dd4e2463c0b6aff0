#pragma once

// The Apollonius domain: sphere points the evader reaches no later than the
// pursuer when both move at full speed along geodesics.
//
// Boundary parameterisation. From E, a ray leaves at angle lambda measured from
// the direction toward P, positive toward +n (the great-circle normal of P, E).
// lambda = 0 charges the pursuer, lambda = +-pi flees straight away from it. The
// boundary point on that ray sits at arc length delta(lambda) from E and
// satisfies
//
//   cos(delta / (mu R)) = cos(delta / R) cos(alpha) + sin(alpha) cos(lambda) sin(delta / R),
//
// the spherical law of cosines for the pursuer's leg with arrival times equal.
// An evader heading u_E (from t_E) corresponds to lambda = pi - u_E.

#include "sphere_game/sphere_geom.hpp"

#include <cstddef>
#include <vector>

namespace sphere_game {

inline constexpr std::size_t kDefaultBoundarySamples = 721;

struct BoundarySample {
  double lambda;   ///< ray angle at E, radians
  double delta;    ///< arc length from E
  SurfacePoint point;
  double time;     ///< delta / (mu v_P)
};

/// Sampled boundary of the evader's dominance region. Immutable once built.
class ApolloniusBoundary {
 public:
  ApolloniusBoundary(SurfacePoint P, SurfacePoint E, GameParams params, double alpha,
                     std::vector<BoundarySample> samples, bool monotone);

  const SurfacePoint& pursuer() const { return P_; }
  const SurfacePoint& evader() const { return E_; }
  const GameParams& params() const { return params_; }
  double alpha() const { return alpha_; }
  const std::vector<BoundarySample>& samples() const { return samples_; }
  /// Whether delta was strictly increasing in lambda over [0, pi].
  bool monotone() const { return monotone_; }

 private:
  SurfacePoint P_;
  SurfacePoint E_;
  GameParams params_;
  double alpha_;
  std::vector<BoundarySample> samples_;
  bool monotone_;
};

/// pi (1 - mu): the largest separation for which the equilibrium intercept
/// lies on the boundary.
double critical_alpha(const GameParams& params);

/// delta(0) = alpha R mu / (1 + mu).
double delta_min_closed_form(double alpha, const GameParams& params);
/// delta(pi): alpha R mu / (1 - mu) up to the critical angle, R mu (2 pi - alpha) / (1 + mu) above it.
double delta_max_closed_form(double alpha, const GameParams& params);

/// Residual of the implicit boundary relation (LHS - RHS).
double boundary_relation_residual(double delta, double lambda, double alpha,
                                  const GameParams& params);

/// Root of the boundary relation on the ray lambda. Throws NumericalBreakdown
/// when the bracket [1e-9 R, delta(pi) + 1e-6 R] holds no sign change, and
/// std::invalid_argument for alpha outside (0, pi).
double delta_of_lambda(double lambda, double alpha, const GameParams& params);

/// Unit tangent at E of the ray with angle lambda.
Vec3 ray_direction(const SurfacePoint& E, const GreatCircleFrame& frame, double lambda);

/// Samples lambda_k = -pi + 2 pi k / (n - 1), k = 0..n-1 (closed curve, both
/// ends at lambda = +-pi). Solves for lambda >= 0 and mirrors onto lambda < 0.
ApolloniusBoundary boundary(const SurfacePoint& P, const SurfacePoint& E,
                            const GameParams& params,
                            std::size_t n_samples = kDefaultBoundarySamples);

/// Rounding allowance of the closed-set membership test, relative to R.
inline constexpr double kMembershipSlack = 1e-12;

/// arc(I, E) / (mu v_P) <= arc(I, P) / v_P. Boundary points count as inside.
bool contains(const SurfacePoint& I, const SurfacePoint& P, const SurfacePoint& E,
              const GameParams& params);
bool contains(const ApolloniusBoundary& b, const SurfacePoint& I);

/// Boundary point on ray lambda, computed directly rather than from the samples.
SurfacePoint boundary_point(const ApolloniusBoundary& b, double lambda);

/// Geodesic distance from X to the boundary curve. The nearest sample is
/// refined by a continuous minimisation over lambda.
double distance_to_boundary(const SurfacePoint& X, const ApolloniusBoundary& b);

struct InterceptPoint {
  SurfacePoint point;
  double time;
  double arc_from_evader;
};

/// Equilibrium intercept: E flees along lambda = pi for R mu alpha / (1 - mu),
/// captured at value(alpha). Throws std::invalid_argument when degenerate.
InterceptPoint intercept_point(const SurfacePoint& P, const SurfacePoint& E,
                               const GameParams& params);

enum class InterceptClass { on_boundary, inside, outside };

const char* to_string(InterceptClass c);

/// Classifies a point against the domain: on_boundary when within `tolerance`
/// (absolute, length units) of the boundary curve.
InterceptClass classify(const SurfacePoint& X, const ApolloniusBoundary& b,
                        double tolerance);

}  // namespace sphere_game
