#pragma once

#include "sphere_game/apollonius.hpp"
#include "sphere_game/sim_engine.hpp"
#include "sphere_game/sphere_geom.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sphere_game {

// ---------------------------------------------------------------------------
// Two pursuers, one evader.
// ---------------------------------------------------------------------------

/// Evader at the north pole; pursuer i at colatitude alpha_i, pursuer 1 on
/// longitude 0 and pursuer 2 on longitude lambda_o. Both pursuers chase the
/// same evader, so v_Pi = evader_speed / mu_i.
struct TwoPursuerConfig {
  double radius = 1.0;
  double evader_speed = 0.5;
  double alpha_1 = 1.0;
  double alpha_2 = 1.0;
  double lambda_o = 0.0;
  double mu_1 = 0.5;
  double mu_2 = 0.5;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;

  GameParams pursuer_params(int which) const;
  SurfacePoint evader_position() const;
  SurfacePoint pursuer_position(int which) const;

  bool operator==(const TwoPursuerConfig&) const = default;
};

enum class InterceptCase { P1_solo, P2_solo, joint_boundary };

const char* to_string(InterceptCase c);

struct InterceptResult {
  SurfacePoint point;
  double time;
  InterceptCase case_tag;
  /// Arrival times at `point` for E, P1, P2 at full speed.
  std::array<double, 3> arrival_times;
  /// Geodesic distance from each pursuer to `point`.
  std::array<double, 2> pursuer_distances;
  /// Set when the boundaries do not cross and the solo case of the inner
  /// domain's pursuer was returned instead.
  std::optional<std::string> diagnostic;
};

struct BoundaryIntersections {
  std::vector<SurfacePoint> points;
  /// The two boundary curves coincide (within rounding) along every sample.
  bool coincident = false;
};

/// Points of the first boundary where the second pursuer arrives exactly with
/// the evader, refined by bisection in lambda to 1e-10. Both boundaries must
/// share the evader. Throws std::invalid_argument when they do not or when
/// either has fewer than 361 samples.
BoundaryIntersections boundary_intersections(const ApolloniusBoundary& b1,
                                             const ApolloniusBoundary& b2);

/// Intercept of the two-pursuer game:
///   - P1's one-on-one intercept if it lies in A2,
///   - else P2's if it lies in A1,
///   - else the common boundary point farthest from E.
/// Requires alpha_i < pi (1 - mu_i). Throws NumericalBreakdown when neither
/// solo case applies and the boundaries neither cross nor nest.
InterceptResult two_pursuer_intercept(const TwoPursuerConfig& cfg,
                                      std::size_t n_samples = kDefaultBoundarySamples);

// ---------------------------------------------------------------------------
// Target guarding.
// ---------------------------------------------------------------------------

/// Spherical cap of angular radius `angular_radius` around `center`.
struct TargetRegion {
  SurfacePoint center;
  double angular_radius;

  bool contains(const SurfacePoint& X) const;
};

/// A intersects T. Exact up to the boundary refinement of distance_to_boundary:
/// the cap meets the (star-shaped) domain iff its centre is inside or the
/// boundary comes within the cap radius.
bool evader_wins_guarding(const ApolloniusBoundary& b, const TargetRegion& T);

/// pi (1 - mu) / (1 + mu): largest separation for which the geodesic parallel
/// strategy keeps the dominance region nested.
double guarding_alpha_threshold(const GameParams& params);

bool pursuer_wins_guarding(const ApolloniusBoundary& b, const TargetRegion& T, double alpha,
                           const GameParams& params);

/// Pursuer heading (in the great-circle frame at P, signed, in (-pi, pi]) of
/// the geodesic toward the boundary point on the evader's current ray lambda.
double geodesic_parallel_heading(const SurfacePoint& P, const SurfacePoint& E, double lambda,
                                 const GameParams& params);

/// Converts an evader heading (from t_E) to the ray angle lambda and back.
double lambda_from_evader_heading(double u_E);
double evader_heading_from_lambda(double lambda);

PursuerPolicy geodesic_parallel_pursuer(const GameParams& params);

struct GuardingPlayoutOptions {
  RunOptions run;
  std::size_t segments = 5;
  std::uint64_t seed = 1;
  /// Check nesting every this many simulation steps (and at the final state).
  std::size_t checkpoint_every = 50;
  std::size_t n_samples = kDefaultBoundarySamples;
};

struct GuardingPlayout {
  Trajectory trajectory;
  std::size_t checkpoints = 0;
  /// Boundary samples of A(t) found outside A(0), summed over checkpoints.
  std::size_t escapes = 0;
  /// R alpha / ((1 - mu) v_P) at the start.
  double capture_bound = 0.0;
};

/// Evader runs a random polyline of `segments` geodesic arcs at full speed
/// (the last arc continues until capture); the pursuer plays the geodesic
/// parallel strategy. Deterministic in the seed.
GuardingPlayout guarding_playout(const SurfacePoint& P0, const SurfacePoint& E0,
                                 const GameParams& params,
                                 const GuardingPlayoutOptions& options);

}  // namespace sphere_game
