#include "sphere_game/apollonius.hpp"

#include "sphere_game/errors.hpp"
#include "sphere_game/strategies.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace sphere_game {

ApolloniusBoundary::ApolloniusBoundary(SurfacePoint P, SurfacePoint E, GameParams params,
                                       double alpha, std::vector<BoundarySample> samples,
                                       bool monotone)
    : P_(std::move(P)),
      E_(std::move(E)),
      params_(params),
      alpha_(alpha),
      samples_(std::move(samples)),
      monotone_(monotone) {}

double critical_alpha(const GameParams& params) { return kPi * (1.0 - params.mu); }

double delta_min_closed_form(double alpha, const GameParams& params) {
  return alpha * params.R * params.mu / (1.0 + params.mu);
}

double delta_max_closed_form(double alpha, const GameParams& params) {
  if (alpha <= critical_alpha(params)) {
    return alpha * params.R * params.mu / (1.0 - params.mu);
  }
  // Above the critical angle the pursuer meets the fleeing evader by going
  // around the back of the sphere.
  return params.R * params.mu * (kTwoPi - alpha) / (1.0 + params.mu);
}

double boundary_relation_residual(double delta, double lambda, double alpha,
                                  const GameParams& params) {
  const double d = delta / params.R;
  return std::cos(d / params.mu) -
         (std::cos(d) * std::cos(alpha) + std::sin(alpha) * std::cos(lambda) * std::sin(d));
}

namespace {

// Central angle between P and the point at arc d (radians) along ray lambda from
// E, in E-centred coordinates where E is the pole and P lies at colatitude alpha.
double pursuer_leg_angle(double d, double lambda, double alpha) {
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);
  const double sd = std::sin(d);
  const double cd = std::cos(d);
  const double sl = std::sin(lambda);
  const double cl = std::cos(lambda);
  const Vec3 p(sa, 0.0, ca);
  const Vec3 i(sd * cl, sd * sl, cd);
  return central_angle(p, i);
}

}  // namespace

double delta_of_lambda(double lambda, double alpha, const GameParams& params) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw std::invalid_argument("delta_of_lambda needs alpha in (0, pi), got " +
                                std::to_string(alpha));
  }
  const double R = params.R;
  const double mu = params.mu;
  // Arrival-time gap (in pursuer-distance units) along the ray. Strictly
  // increasing in delta, and zero exactly where the boundary relation holds
  // with both legs shorter than pi R.
  const auto gap = [&](double delta) {
    return delta / mu - R * pursuer_leg_angle(delta / R, lambda, alpha);
  };

  const double lo = 1e-9 * R;
  const double hi = delta_max_closed_form(alpha, params) + 1e-6 * R;
  const double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (!(g_lo < 0.0 && g_hi > 0.0)) {
    throw NumericalBreakdown(fmt::format(
        "boundary root not bracketed: alpha={:.17g} lambda={:.17g} bracket=[{:.17g}, {:.17g}] "
        "gap=[{:.3e}, {:.3e}]",
        alpha, lambda, lo, hi, g_lo, g_hi));
  }
  const auto done = [R](double a, double b) { return std::abs(b - a) <= 1e-15 * R; };
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(gap, lo, hi, done, max_iter);
  return 0.5 * (a + b);
}

Vec3 ray_direction(const SurfacePoint& /*E*/, const GreatCircleFrame& frame, double lambda) {
  return (-std::cos(lambda) * frame.t_E + std::sin(lambda) * frame.n).normalized();
}

ApolloniusBoundary boundary(const SurfacePoint& P, const SurfacePoint& E,
                            const GameParams& params, std::size_t n_samples) {
  if (n_samples < 8) {
    throw std::invalid_argument("boundary needs at least 8 samples");
  }
  const RelativeConfig config = relative_config(P, E);
  if (config.degenerate) {
    throw std::invalid_argument("Apollonius boundary undefined for collocated or antipodal agents");
  }
  const GreatCircleFrame& frame = *config.frame;
  const double alpha = config.alpha;
  const double v_E = params.max_evader_speed();
  const std::size_t last = n_samples - 1;

  const auto lambda_at = [&](std::size_t k) {
    return kPi * (static_cast<double>(2 * k) - static_cast<double>(last)) /
           static_cast<double>(last);
  };
  const auto make_sample = [&](double lambda, double delta) {
    return BoundarySample{lambda, delta,
                          step_geodesic(E, ray_direction(E, frame, lambda), delta),
                          delta / v_E};
  };

  std::vector<std::optional<BoundarySample>> slots(n_samples);
  const std::size_t first_nonneg = (last + 1) / 2;
  bool monotone = true;
  double previous = -1.0;
  for (std::size_t k = first_nonneg; k < n_samples; ++k) {
    const double lambda = lambda_at(k);
    const double delta = delta_of_lambda(lambda, alpha, params);
    if (delta <= previous) {
      monotone = false;
    }
    previous = delta;
    slots[k] = make_sample(lambda, delta);
    const std::size_t mirror = last - k;
    if (mirror != k) {
      slots[mirror] = make_sample(-lambda, delta);
    }
  }

  std::vector<BoundarySample> samples;
  samples.reserve(n_samples);
  for (auto& s : slots) {
    samples.push_back(std::move(*s));
  }
  return ApolloniusBoundary(P, E, params, alpha, std::move(samples), monotone);
}

bool contains(const SurfacePoint& I, const SurfacePoint& P, const SurfacePoint& E,
              const GameParams& params) {
  return arc_length(I, E) <= params.mu * arc_length(I, P) + kMembershipSlack * params.R;
}

bool contains(const ApolloniusBoundary& b, const SurfacePoint& I) {
  return contains(I, b.pursuer(), b.evader(), b.params());
}

SurfacePoint boundary_point(const ApolloniusBoundary& b, double lambda) {
  const RelativeConfig config = relative_config(b.pursuer(), b.evader());
  const double wrapped = wrap_pi(lambda);
  const double delta = delta_of_lambda(wrapped, b.alpha(), b.params());
  return step_geodesic(b.evader(), ray_direction(b.evader(), config.require_frame(), wrapped),
                       delta);
}

double distance_to_boundary(const SurfacePoint& X, const ApolloniusBoundary& b) {
  const auto& samples = b.samples();
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double d = arc_length(X, samples[k].point);
    if (d < best_distance) {
      best_distance = d;
      best = k;
    }
  }
  if (best_distance == 0.0) {
    return 0.0;
  }
  const double spacing = kTwoPi / static_cast<double>(samples.size() - 1);
  const double center = samples[best].lambda;
  const RelativeConfig config = relative_config(b.pursuer(), b.evader());
  const GreatCircleFrame& frame = config.require_frame();
  const auto distance_at = [&](double lambda) {
    const double wrapped = wrap_pi(lambda);
    const double delta = delta_of_lambda(wrapped, b.alpha(), b.params());
    return arc_length(X, step_geodesic(b.evader(), ray_direction(b.evader(), frame, wrapped),
                                       delta));
  };
  const double lo = center - spacing;
  const double hi = center + spacing;
  // Brent's method is capped at half the mantissa, so where the distance has a
  // clean minimum we bisect on the sign of its symmetric difference instead.
  const double h = 1e-6 * spacing;
  const auto slope = [&](double lambda) { return distance_at(lambda + h) - distance_at(lambda - h); };
  double refined = std::numeric_limits<double>::infinity();
  if (slope(lo) < 0.0 && slope(hi) > 0.0) {
    const auto done = [](double a, double b) { return std::abs(b - a) <= 1e-15; };
    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::bisect(slope, lo, hi, done, max_iter);
    refined = std::min(distance_at(a), distance_at(b));
  } else {
    std::uintmax_t max_iter = 200;
    refined = boost::math::tools::brent_find_minima(distance_at, lo, hi, 50, max_iter).second;
  }
  return std::min(best_distance, refined);
}

InterceptPoint intercept_point(const SurfacePoint& P, const SurfacePoint& E,
                               const GameParams& params) {
  const RelativeConfig config = relative_config(P, E);
  if (config.degenerate) {
    throw std::invalid_argument(
        "intercept point undefined for alpha in {0, pi}; at pi it depends on the dispersal tie-break");
  }
  const double arc = params.R * params.mu * config.alpha / (1.0 - params.mu);
  return InterceptPoint{step_geodesic(E, config.frame->t_E, arc), value(config.alpha, params),
                        arc};
}

const char* to_string(InterceptClass c) {
  switch (c) {
    case InterceptClass::on_boundary:
      return "on_boundary";
    case InterceptClass::inside:
      return "inside";
    case InterceptClass::outside:
      return "outside";
  }
  return "unknown";
}

InterceptClass classify(const SurfacePoint& X, const ApolloniusBoundary& b, double tolerance) {
  if (distance_to_boundary(X, b) <= tolerance) {
    return InterceptClass::on_boundary;
  }
  return contains(b, X) ? InterceptClass::inside : InterceptClass::outside;
}

}  // namespace sphere_game
