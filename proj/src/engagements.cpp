#include "sphere_game/engagements.hpp"

#include "sphere_game/errors.hpp"
#include "sphere_game/strategies.hpp"

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sphere_game {

void TwoPursuerConfig::validate() const {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (!(evader_speed > 0.0)) throw std::invalid_argument("evader speed must be positive");
  for (const double mu : {mu_1, mu_2}) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("speed ratios must lie in (0, 1)");
  }
  for (const double alpha : {alpha_1, alpha_2}) {
    if (!(alpha > 0.0 && alpha < kPi)) {
      throw std::invalid_argument("pursuer offsets must lie in (0, pi)");
    }
  }
  if (!std::isfinite(lambda_o)) throw std::invalid_argument("longitudinal offset must be finite");
}

GameParams TwoPursuerConfig::pursuer_params(int which) const {
  const double mu = which == 1 ? mu_1 : mu_2;
  return GameParams::make(radius, evader_speed / mu, mu);
}

SurfacePoint TwoPursuerConfig::evader_position() const {
  return SurfacePoint(Vec3(0.0, 0.0, radius), radius);
}

SurfacePoint TwoPursuerConfig::pursuer_position(int which) const {
  const double alpha = which == 1 ? alpha_1 : alpha_2;
  const double longitude = which == 1 ? 0.0 : lambda_o;
  return from_spherical(0.5 * kPi - alpha, longitude, radius);
}

const char* to_string(InterceptCase c) {
  switch (c) {
    case InterceptCase::P1_solo:
      return "P1_solo";
    case InterceptCase::P2_solo:
      return "P2_solo";
    case InterceptCase::joint_boundary:
      return "joint_boundary";
  }
  return "unknown";
}

BoundaryIntersections boundary_intersections(const ApolloniusBoundary& b1,
                                             const ApolloniusBoundary& b2) {
  if (b1.samples().size() < 361 || b2.samples().size() < 361) {
    throw std::invalid_argument("boundary intersection needs at least 361 samples per boundary");
  }
  const SurfacePoint& E = b1.evader();
  if ((E.position() - b2.evader().position()).norm() > 1e-12 * E.radius()) {
    throw std::invalid_argument("boundaries belong to different evaders");
  }
  const SurfacePoint& P2 = b2.pursuer();
  const GameParams& params2 = b2.params();
  const double v_E = params2.max_evader_speed();
  // Positive where the point lies strictly inside A2.
  const auto gap = [&](const SurfacePoint& I) {
    return arc_length(I, P2) / params2.v_P - arc_length(I, E) / v_E;
  };

  const auto& samples = b1.samples();
  std::vector<double> g(samples.size());
  bool coincident = true;
  const double time_scale = E.radius() / v_E;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    g[k] = gap(samples[k].point);
    if (std::abs(g[k]) > 1e-9 * time_scale) {
      coincident = false;
    }
  }
  BoundaryIntersections result;
  if (coincident) {
    result.coincident = true;
    return result;
  }

  const auto along_b1 = [&](double lambda) { return gap(boundary_point(b1, lambda)); };
  const auto done = [](double a, double b) { return std::abs(b - a) <= 1e-10; };
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    if ((g[k] < 0.0) == (g[k + 1] < 0.0)) {
      continue;
    }
    std::uintmax_t max_iter = 100;
    const auto [a, b] = boost::math::tools::bisect(along_b1, samples[k].lambda,
                                                   samples[k + 1].lambda, done, max_iter);
    result.points.push_back(boundary_point(b1, 0.5 * (a + b)));
  }
  return result;
}

namespace {

InterceptResult make_result(const SurfacePoint& point, InterceptCase tag,
                            const TwoPursuerConfig& cfg, const SurfacePoint& E,
                            const SurfacePoint& P1, const SurfacePoint& P2) {
  const double d1 = arc_length(point, P1);
  const double d2 = arc_length(point, P2);
  const double t_E = arc_length(point, E) / cfg.evader_speed;
  InterceptResult r{point,
                    t_E,
                    tag,
                    {t_E, d1 / cfg.pursuer_params(1).v_P, d2 / cfg.pursuer_params(2).v_P},
                    {d1, d2},
                    std::nullopt};
  return r;
}

bool all_inside(const ApolloniusBoundary& inner, const ApolloniusBoundary& outer) {
  return std::all_of(inner.samples().begin(), inner.samples().end(),
                     [&](const BoundarySample& s) { return contains(outer, s.point); });
}

}  // namespace

InterceptResult two_pursuer_intercept(const TwoPursuerConfig& cfg, std::size_t n_samples) {
  cfg.validate();
  if (!(cfg.alpha_1 < kPi * (1.0 - cfg.mu_1)) || !(cfg.alpha_2 < kPi * (1.0 - cfg.mu_2))) {
    throw std::invalid_argument(
        "two-pursuer intercept requires alpha_i < pi (1 - mu_i) for both pursuers");
  }
  const SurfacePoint E = cfg.evader_position();
  const SurfacePoint P1 = cfg.pursuer_position(1);
  const SurfacePoint P2 = cfg.pursuer_position(2);
  const GameParams params1 = cfg.pursuer_params(1);
  const GameParams params2 = cfg.pursuer_params(2);

  const InterceptPoint solo1 = intercept_point(P1, E, params1);
  if (contains(solo1.point, P2, E, params2)) {
    return make_result(solo1.point, InterceptCase::P1_solo, cfg, E, P1, P2);
  }
  const InterceptPoint solo2 = intercept_point(P2, E, params2);
  if (contains(solo2.point, P1, E, params1)) {
    return make_result(solo2.point, InterceptCase::P2_solo, cfg, E, P1, P2);
  }

  const ApolloniusBoundary b1 = boundary(P1, E, params1, n_samples);
  const ApolloniusBoundary b2 = boundary(P2, E, params2, n_samples);
  const BoundaryIntersections crossings = boundary_intersections(b1, b2);
  if (!crossings.points.empty()) {
    const auto farthest = std::max_element(
        crossings.points.begin(), crossings.points.end(),
        [&](const SurfacePoint& a, const SurfacePoint& b) {
          return arc_length(E, a) < arc_length(E, b);
        });
    return make_result(*farthest, InterceptCase::joint_boundary, cfg, E, P1, P2);
  }

  // Nested domains: the outer pursuer is irrelevant.
  if (all_inside(b1, b2)) {
    InterceptResult r = make_result(solo1.point, InterceptCase::P1_solo, cfg, E, P1, P2);
    r.diagnostic = "boundaries do not cross; A1 nested in A2";
    return r;
  }
  if (all_inside(b2, b1)) {
    InterceptResult r = make_result(solo2.point, InterceptCase::P2_solo, cfg, E, P1, P2);
    r.diagnostic = "boundaries do not cross; A2 nested in A1";
    return r;
  }
  throw NumericalBreakdown(fmt::format(
      "two-pursuer intercept: no solo case applies and the boundaries neither cross nor nest "
      "(alpha_1={:.17g} alpha_2={:.17g} lambda_o={:.17g} mu_1={:.17g} mu_2={:.17g} coincident={})",
      cfg.alpha_1, cfg.alpha_2, cfg.lambda_o, cfg.mu_1, cfg.mu_2, crossings.coincident));
}

bool TargetRegion::contains(const SurfacePoint& X) const {
  return arc_length(X, center) <= angular_radius * center.radius() * (1.0 + 1e-12);
}

bool evader_wins_guarding(const ApolloniusBoundary& b, const TargetRegion& T) {
  if (contains(b, T.center) || T.contains(b.evader())) {
    return true;
  }
  // The centre is outside A; any point of A within the cap is joined to the
  // centre by a geodesic that crosses the boundary inside the cap.
  return distance_to_boundary(T.center, b) <=
         T.angular_radius * T.center.radius() * (1.0 + 1e-12);
}

double guarding_alpha_threshold(const GameParams& params) {
  return kPi * (1.0 - params.mu) / (1.0 + params.mu);
}

bool pursuer_wins_guarding(const ApolloniusBoundary& b, const TargetRegion& T, double alpha,
                           const GameParams& params) {
  return alpha <= guarding_alpha_threshold(params) && !evader_wins_guarding(b, T);
}

double geodesic_parallel_heading(const SurfacePoint& P, const SurfacePoint& E, double lambda,
                                 const GameParams& params) {
  const RelativeConfig config = relative_config(P, E);
  const GreatCircleFrame& frame = config.require_frame();
  const double wrapped = wrap_pi(lambda);
  const double delta = delta_of_lambda(wrapped, config.alpha, params);
  const SurfacePoint target = step_geodesic(E, ray_direction(E, frame, wrapped), delta);
  const Vec3 dir = tangent_toward(P, target.position());
  return std::atan2(dir.dot(frame.n), dir.dot(frame.t_P));
}

double lambda_from_evader_heading(double u_E) { return wrap_pi(kPi - u_E); }

double evader_heading_from_lambda(double lambda) { return wrap_two_pi(kPi - lambda); }

PursuerPolicy geodesic_parallel_pursuer(const GameParams& params) {
  return [params](const GameState& state, const EvaderControl& evader) {
    if (evader.v_E <= 0.0) {
      return 0.0;
    }
    return geodesic_parallel_heading(state.P, state.E, lambda_from_evader_heading(evader.u_E),
                                     params);
  };
}

GuardingPlayout guarding_playout(const SurfacePoint& P0, const SurfacePoint& E0,
                                 const GameParams& params,
                                 const GuardingPlayoutOptions& options) {
  const RelativeConfig start = relative_config(P0, E0);
  start.require_frame();
  if (options.segments == 0) {
    throw std::invalid_argument("evader polyline needs at least one segment");
  }
  const double bound = value(start.alpha, params);
  const double dt = options.run.dt;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> duration(0.1 * bound, 0.4 * bound);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  // Segment k starts at step switch_steps[k]; switches happen on step
  // boundaries so the evader's motion is an exact polyline.
  std::vector<std::size_t> switch_steps{0};
  std::vector<double> headings{angle(rng)};
  double elapsed = 0.0;
  for (std::size_t k = 1; k < options.segments; ++k) {
    elapsed += duration(rng);
    switch_steps.push_back(static_cast<std::size_t>(std::floor(elapsed / dt)));
    headings.push_back(angle(rng));
  }

  const double v_max = params.max_evader_speed();
  struct PolylineState {
    std::size_t segment = 0;
    bool started = false;
    Vec3 pole = Vec3::Zero();
  };
  EvaderPolicy evader = [=, state = PolylineState{}](const GameState& s) mutable {
    const auto step = static_cast<std::size_t>(std::llround(s.t / dt));
    std::size_t segment = state.segment;
    while (segment + 1 < switch_steps.size() && step >= switch_steps[segment + 1]) {
      ++segment;
    }
    if (!state.started || segment != state.segment) {
      const Vec3 d = heading_to_velocity(s.E, s.config, headings[segment], 1.0);
      state.pole = s.E.unit().cross(d).normalized();
      state.segment = segment;
      state.started = true;
    }
    const Vec3 d = state.pole.cross(s.E.unit()).normalized();
    return EvaderControl{heading_of(s.E, s.config, d), v_max};
  };

  GuardingPlayout result;
  result.capture_bound = bound;
  result.trajectory = run(P0, E0, geodesic_parallel_pursuer(params), evader, options.run, params);

  const auto& steps = result.trajectory.steps;
  const std::size_t every = std::max<std::size_t>(1, options.checkpoint_every);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const bool last = k + 1 == steps.size();
    if (k % every != 0 && !last) {
      continue;
    }
    const TrajectoryStep& s = steps[k];
    // Too close to capture (or past it) for a meaningful domain.
    if (s.alpha < 1e-6 || s.alpha > kPi - 1e-6) {
      continue;
    }
    const ApolloniusBoundary b = boundary(s.P, s.E, params, options.n_samples);
    ++result.checkpoints;
    for (const BoundarySample& sample : b.samples()) {
      if (!contains(sample.point, P0, E0, params)) {
        ++result.escapes;
      }
    }
  }
  return result;
}

}  // namespace sphere_game
