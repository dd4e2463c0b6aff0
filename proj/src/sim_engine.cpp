#include "sphere_game/sim_engine.hpp"

#include "sphere_game/errors.hpp"
#include "sphere_game/strategies.hpp"

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace sphere_game {

PursuerPolicy equilibrium_pursuer() {
  return [](const GameState&, const EvaderControl&) { return 0.0; };
}

EvaderPolicy equilibrium_evader(const GameParams& params) {
  const double v_max = params.max_evader_speed();
  return [v_max](const GameState&) { return EvaderControl{0.0, v_max}; };
}

namespace {

struct StepMotion {
  Vec3 p_dir;
  Vec3 e_dir;
  double v_E;
};

// First time s in (0, dt] at which the separation reaches `tolerance` along
// the current step, if any.
std::optional<double> capture_within_step(const SurfacePoint& P, const SurfacePoint& E,
                                          const StepMotion& motion, double dt,
                                          double tolerance, const GameParams& params) {
  const auto positions = [&](double s) {
    const double sign = s < 0.0 ? -1.0 : 1.0;
    return std::pair{step_geodesic(P, sign * motion.p_dir, params.v_P * std::abs(s)),
                     step_geodesic(E, sign * motion.e_dir, motion.v_E * std::abs(s))};
  };
  // Same measure as the recorded trajectory, so capture and the final alpha agree.
  const auto separation = [&](double s) {
    const auto [p, e] = positions(s);
    return relative_config(p, e).alpha;
  };
  // Squared chord is smooth through contact where the angle has a kink.
  const double h = 1e-6 * dt;
  const auto slope = [&](double s) {
    const auto [p1, e1] = positions(s + h);
    const auto [p0, e0] = positions(s - h);
    return (p1.position() - e1.position()).squaredNorm() -
           (p0.position() - e0.position()).squaredNorm();
  };

  double hit = -1.0;
  if (separation(dt) <= tolerance) {
    hit = dt;
  } else if (slope(0.0) < 0.0 && slope(dt) > 0.0) {
    const auto done = [dt](double a, double b) { return std::abs(b - a) <= 1e-15 * dt; };
    std::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::bisect(slope, 0.0, dt, done, max_iter);
    const double s_min = 0.5 * (bracket.first + bracket.second);
    if (separation(s_min) <= tolerance) {
      hit = s_min;
    }
  }
  if (hit < 0.0) {
    return std::nullopt;
  }
  const auto gap = [&](double s) { return separation(s) - tolerance; };
  const auto done = [dt](double a, double b) { return std::abs(b - a) <= 1e-14 * dt; };
  std::uintmax_t max_iter = 200;
  const auto bracket = boost::math::tools::bisect(gap, 0.0, hit, done, max_iter);
  // Right end of the bracket keeps separation <= tolerance.
  return gap(bracket.second) <= 0.0 ? bracket.second : hit;
}

}  // namespace

Trajectory run(const SurfacePoint& P0, const SurfacePoint& E0, const PursuerPolicy& pursuer,
               const EvaderPolicy& evader, const RunOptions& options, const GameParams& params) {
  if (!(options.dt > 0.0)) {
    throw std::invalid_argument("time step must be positive");
  }
  if (!(options.capture_tolerance > 0.0)) {
    throw std::invalid_argument("capture tolerance must be positive");
  }
  const double max_time = options.max_time.value_or(4.0 * value(kPi, params));
  const double dt = options.dt;
  const double tol = options.capture_tolerance;

  Trajectory traj;
  traj.dt = dt;
  traj.capture_tolerance = tol;
  traj.tie_break = options.tie_break;

  SurfacePoint P = P0;
  SurfacePoint E = E0;
  RelativeConfig config = relative_config(P, E);
  traj.steps.push_back({0.0, P, E, config.alpha, ControlInput{}});
  if (config.alpha <= tol) {
    traj.capture_time = 0.0;
    return traj;
  }

  for (std::size_t k = 0;; ++k) {
    const double t = dt * static_cast<double>(k);
    if (t >= max_time) {
      traj.capped = true;
      break;
    }

    ControlInput ctrl;
    StepMotion motion;
    if (config.degenerate) {
      // alpha == pi: no great circle, play the dispersal action for one step.
      ctrl = dispersal_controls(options.tie_break, params);
      // The evader's direction is irrelevant at zero speed but must be tangent.
      motion = {dispersal_direction(P, options.tie_break), dispersal_direction(E, 0.0), 0.0};
    } else {
      const GameState state{t, P, E, config};
      const EvaderControl e_ctrl = evader(state);
      ctrl = ControlInput{0.0, e_ctrl.u_E, e_ctrl.v_E};
      if (!is_admissible(ctrl, params)) {
        throw InadmissibleControl(
            fmt::format("evader control v_E={:.17g} u_E={:.17g} outside [0, {:.17g}]",
                        e_ctrl.v_E, e_ctrl.u_E, params.max_evader_speed()),
            k);
      }
      ctrl.u_P = pursuer(state, e_ctrl);
      if (!std::isfinite(ctrl.u_P)) {
        throw InadmissibleControl("pursuer heading is not finite", k);
      }
      motion = {heading_to_velocity(P, config, ctrl.u_P, 1.0),
                heading_to_velocity(E, config, ctrl.u_E, 1.0), ctrl.v_E};
    }
    traj.steps.back().ctrl = ctrl;

    const double closing = (params.v_P + motion.v_E) * dt / params.R;
    if (config.alpha - closing <= tol) {
      if (const auto s = capture_within_step(P, E, motion, dt, tol, params)) {
        const SurfacePoint p = step_geodesic(P, motion.p_dir, params.v_P * *s);
        const SurfacePoint e = step_geodesic(E, motion.e_dir, motion.v_E * *s);
        traj.steps.push_back({t + *s, p, e, relative_config(p, e).alpha, ctrl});
        traj.capture_time = t + *s;
        break;
      }
    }

    P = step_geodesic(P, motion.p_dir, params.v_P * dt);
    E = step_geodesic(E, motion.e_dir, motion.v_E * dt);
    config = relative_config(P, E);
    const double t_next = dt * static_cast<double>(k + 1);
    traj.steps.push_back({t_next, P, E, config.alpha, ctrl});
    if (config.alpha <= tol) {
      traj.capture_time = t_next;
      break;
    }
  }
  return traj;
}

}  // namespace sphere_game
