// Acceptance checks for the published results. One PASS/FAIL line per
// criterion; the exit status is non-zero if any criterion fails.

#include "sphere_game/apollonius.hpp"
#include "sphere_game/engagements.hpp"
#include "sphere_game/kinematics.hpp"
#include "sphere_game/sim_engine.hpp"
#include "sphere_game/strategies.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace sphere_game;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const GameParams kHalf{1.0, 1.0, 0.5};

SurfacePoint pole(double R = 1.0) { return from_spherical(kPi / 2, 0.0, R); }
SurfacePoint at_colatitude(double alpha, double R = 1.0) {
  return from_spherical(kPi / 2 - alpha, 0.0, R);
}

Trajectory equilibrium_run(double alpha0, double dt, double tol, const GameParams& p,
                           double tie_break = 0.0) {
  RunOptions opt;
  opt.dt = dt;
  opt.capture_tolerance = tol;
  opt.tie_break = tie_break;
  return run(pole(p.R), at_colatitude(alpha0, p.R), equilibrium_pursuer(), equilibrium_evader(p),
             opt, p);
}

Outcome value_reproduction() {
  const auto start = Clock::now();
  const Trajectory t = equilibrium_run(1.0, 1e-4, 1e-6, kHalf);
  const double elapsed = seconds_since(start);
  if (!t.capture_time) return {false, "no capture"};
  const double err = std::abs(*t.capture_time - 2.0);
  return {err <= 2e-4 && elapsed < 5.0,
          fmt::format("tau={:.6f} |tau-2|={:.2e} time={:.2f}s", *t.capture_time, err, elapsed)};
}

Outcome dispersal_gap() {
  const auto start = Clock::now();
  const double v_pi = 2.0 * kPi;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  bool ok = true;
  for (int k = 0; k < 16; ++k) {
    const Trajectory t = equilibrium_run(kPi, 1e-4, 1e-6, kHalf, 2.0 * kPi * k / 16);
    if (!t.capture_time) {
      ok = false;
      continue;
    }
    const double gap = v_pi - *t.capture_time;
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
    ok = ok && gap > 0.0 && gap <= 1e-3;
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 30.0,
          fmt::format("gap in [{:.3e}, {:.3e}] over 16 tie-breaks time={:.2f}s", lo, hi, elapsed)};
}

Outcome saddle_at_pi() {
  double worst = 0.0;
  std::string detail;
  for (double mu : {0.25, 0.5, 0.75}) {
    const GameParams p{1.0, 1.0, mu};
    const double v_max = mu * p.v_P;
    const int n_v = static_cast<int>(std::floor(v_max / 1e-3 + 1e-9)) + 1;
    const int n_u = static_cast<int>(std::ceil(2.0 * kPi / 1e-3));
    const auto speed = [&](int i) { return std::min(i * 1e-3, v_max); };
    std::vector<double> row_max(n_v + 1, -std::numeric_limits<double>::infinity());
    std::vector<double> col_min(n_u, std::numeric_limits<double>::infinity());
    for (int i = 0; i <= n_v; ++i) {
      for (int j = 0; j < n_u; ++j) {
        const double r = rate_of_loss(speed(i), j * 1e-3, p);
        row_max[i] = std::max(row_max[i], r);
        col_min[j] = std::min(col_min[j], r);
      }
    }
    const double min_max = *std::min_element(row_max.begin(), row_max.end());
    const double max_min = *std::max_element(col_min.begin(), col_min.end());
    const double target = mu / (1.0 - mu);
    worst = std::max({worst, std::abs(min_max - target), std::abs(max_min - target)});
    detail += fmt::format("mu={}: {:.12f}/{:.12f} ", mu, min_max, max_min);
  }
  return {worst <= 1e-9, detail + fmt::format("max err={:.2e}", worst)};
}

Outcome delta_endpoints() {
  double endpoint_err = 0.0;
  double arrival_err = 0.0;
  int pairs = 0;
  for (double mu : {0.25, 0.5, 0.75}) {
    for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double alpha = frac * kPi;
      const GameParams p{1.0, 1.0, mu};
      const double alpha_c = kPi * (1.0 - mu);
      const double near = mu * alpha / (1.0 + mu);
      const double far = alpha <= alpha_c ? mu * alpha / (1.0 - mu) : mu * (2.0 * kPi - alpha) / (1.0 + mu);
      endpoint_err = std::max({endpoint_err, std::abs(delta_of_lambda(0.0, alpha, p) - near),
                               std::abs(delta_of_lambda(kPi, alpha, p) - far)});
      const SurfacePoint P = at_colatitude(alpha);
      const SurfacePoint E = pole();
      const ApolloniusBoundary b = boundary(P, E, p, kDefaultBoundarySamples);
      for (const BoundarySample& s : b.samples()) {
        const double t_E = oracle::angle(s.point.position(), E.position()) / (mu * p.v_P);
        const double t_P = oracle::angle(s.point.position(), P.position()) / p.v_P;
        arrival_err = std::max(arrival_err, std::abs(t_E - t_P));
      }
      ++pairs;
    }
  }
  return {pairs == 15 && endpoint_err <= 1e-8 && arrival_err <= 1e-7,
          fmt::format("{} pairs, endpoint err={:.2e}, arrival err={:.2e}", pairs, endpoint_err,
                      arrival_err)};
}

Outcome intercept_dichotomy() {
  bool ok = true;
  std::string detail;
  const auto distance_at = [](double alpha, const GameParams& p) {
    const SurfacePoint P = at_colatitude(alpha);
    const SurfacePoint E = pole();
    const ApolloniusBoundary b = boundary(P, E, p, kDefaultBoundarySamples);
    return distance_to_boundary(intercept_point(P, E, p).point, b);
  };
  double on_worst = 0.0;
  for (double alpha : {0.5, 1.0, 1.5, kPi / 2}) on_worst = std::max(on_worst, distance_at(alpha, kHalf));
  double off_best = std::numeric_limits<double>::infinity();
  for (double alpha : {1.6, 2.0, 2.5}) off_best = std::min(off_best, distance_at(alpha, kHalf));
  ok = on_worst <= 1e-6 && off_best >= 1e-4;
  detail = fmt::format("on-side max={:.2e} off-side min={:.2e}", on_worst, off_best);

  for (double v_E : {0.35, 0.6}) {
    const GameParams p{1.0, 1.0, v_E};
    const double alpha_c = kPi * (1.0 - v_E);
    std::string classes;
    for (double scale : {0.8, 1.0, 1.2}) {
      const double alpha = scale * alpha_c;
      const SurfacePoint P = at_colatitude(alpha);
      const SurfacePoint E = pole();
      const ApolloniusBoundary b = boundary(P, E, p, kDefaultBoundarySamples);
      const InterceptClass c = classify(intercept_point(P, E, p).point, b, 1e-6);
      const InterceptClass expected = scale <= 1.0 ? InterceptClass::on_boundary : InterceptClass::outside;
      ok = ok && c == expected;
      classes += std::string(classes.empty() ? "" : "/") + to_string(c);
    }
    detail += fmt::format(", v_E={}: {}", v_E, classes);
  }
  return {ok, detail};
}

Outcome kinematics_convergence() {
  gen::Source src(2024);
  const std::array<double, 3> hs{1e-2, 1e-3, 1e-4};
  int good = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GameParams p{src.uniform(0.5, 2.0), src.uniform(0.5, 2.0), src.uniform(0.1, 0.9)};
    const SurfacePoint P = src.point(p.R);
    const double alpha0 = src.uniform(0.2, kPi - 0.2);
    const SurfacePoint E = src.at_distance(P, alpha0);
    const ControlInput ctrl{src.uniform(-kPi, kPi), src.uniform(-kPi, kPi),
                            src.uniform(0.0, p.max_evader_speed())};
    const double rate = alpha_rate(ctrl, p);
    std::array<double, 3> err{};
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const AgentPositions moved = advance(P, E, ctrl, hs[k], p);
      const double alpha_h = oracle::angle(moved.P.position(), moved.E.position());
      err[k] = std::abs((alpha_h - alpha0) / hs[k] - rate);
    }
    bool sample_ok = true;
    for (std::size_t k = 1; k < hs.size(); ++k) {
      sample_ok = sample_ok && err[k] <= 0.15 * err[k - 1] + 1e-9;
      if (err[k - 1] > 1e-8) worst_ratio = std::max(worst_ratio, err[k] / err[k - 1]);
    }
    good += sample_ok ? 1 : 0;
  }
  return {good == 100, fmt::format("{}/100 samples first order, worst err ratio per decade={:.4f}",
                                   good, worst_ratio)};
}

Outcome two_pursuer_joint() {
  const auto start = Clock::now();
  TwoPursuerConfig cfg;
  cfg.radius = 1.0;
  cfg.evader_speed = 0.5;
  cfg.mu_1 = 0.5;
  cfg.mu_2 = 0.5;
  cfg.alpha_1 = 0.9 * kPi * (1.0 - cfg.mu_1);
  cfg.alpha_2 = 0.8 * cfg.alpha_1;
  cfg.lambda_o = 0.4 * kPi;
  const InterceptResult r = two_pursuer_intercept(cfg);
  const auto [lo, hi] = std::minmax_element(r.arrival_times.begin(), r.arrival_times.end());
  const double spread = *hi - *lo;

  const SurfacePoint E = cfg.evader_position();
  const ApolloniusBoundary b1 =
      boundary(cfg.pursuer_position(1), E, cfg.pursuer_params(1), kDefaultBoundarySamples);
  const ApolloniusBoundary b2 =
      boundary(cfg.pursuer_position(2), E, cfg.pursuer_params(2), kDefaultBoundarySamples);
  const BoundaryIntersections crossings = boundary_intersections(b1, b2);
  const double chosen = oracle::angle(r.point.position(), E.position());
  double farthest = 0.0;
  for (const SurfacePoint& X : crossings.points) {
    farthest = std::max(farthest, oracle::angle(X.position(), E.position()));
  }
  const double elapsed = seconds_since(start);
  const bool ok = r.case_tag == InterceptCase::joint_boundary && spread <= 1e-6 &&
                  crossings.points.size() >= 2 && chosen >= farthest - 1e-9 && elapsed < 10.0;
  return {ok, fmt::format("case={} spread={:.2e} arc={:.6f} over {} crossings (max {:.6f}) "
                          "time={:.2f}s",
                          to_string(r.case_tag), spread, chosen, crossings.points.size(), farthest,
                          elapsed)};
}

Outcome guarding_containment() {
  const SurfacePoint P = pole();
  const SurfacePoint E = at_colatitude(1.0);
  std::size_t escapes = 0;
  std::size_t checkpoints = 0;
  int late = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GuardingPlayoutOptions opt;
    opt.seed = seed;
    opt.segments = 5;
    opt.n_samples = kDefaultBoundarySamples;
    opt.run.dt = 1e-3;
    opt.run.capture_tolerance = 1e-6;
    const GuardingPlayout g = guarding_playout(P, E, kHalf, opt);
    escapes += g.escapes;
    checkpoints += g.checkpoints;
    const double bound = 1.0 * 1.0 / ((1.0 - 0.5) * 1.0) + 2.0 * opt.run.dt;
    if (!g.trajectory.capture_time || *g.trajectory.capture_time > bound) {
      ++late;
    } else {
      worst_margin = std::max(worst_margin, *g.trajectory.capture_time - bound);
    }
  }
  return {escapes == 0 && late == 0,
          fmt::format("50 playouts, {} checkpoints, {} escapes, {} late, max capture - bound={:.4f}",
                      checkpoints, escapes, late, worst_margin)};
}

Outcome saddle_inequality() {
  const double dt = 1e-3;
  const double alpha0 = 1.2;
  const double tau_star = *equilibrium_run(alpha0, dt, kDefaultCaptureTolerance, kHalf).capture_time;
  RunOptions opt;
  opt.dt = dt;
  gen::Source src(909);
  int evader_wins = 0;
  int pursuer_wins = 0;
  double e_worst = -std::numeric_limits<double>::infinity();
  double p_worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double offset = src.uniform(-kPi, kPi);
    const double speed = src.uniform(0.0, kHalf.max_evader_speed());
    const EvaderPolicy deviant = [=](const GameState&) { return EvaderControl{offset, speed}; };
    const Trajectory t = run(pole(), at_colatitude(alpha0), equilibrium_pursuer(), deviant, opt, kHalf);
    const double tau_e = t.capture_time.value_or(std::numeric_limits<double>::infinity());
    e_worst = std::max(e_worst, tau_e - tau_star);
    if (tau_e > tau_star + 2.0 * dt) ++evader_wins;

    const double heading = src.uniform(-kPi, kPi);
    const PursuerPolicy stubborn = [=](const GameState&, const EvaderControl&) { return heading; };
    const Trajectory u = run(pole(), at_colatitude(alpha0), stubborn, equilibrium_evader(kHalf), opt, kHalf);
    const double tau_p = u.capture_time.value_or(std::numeric_limits<double>::infinity());
    p_worst = std::min(p_worst, tau_p - tau_star);
    if (tau_p < tau_star - 2.0 * dt) ++pursuer_wins;
  }
  return {evader_wins == 0 && pursuer_wins == 0,
          fmt::format("tau*={:.4f}, max E gain={:.4f}, min P gain={}, violations E={} P={}",
                      tau_star, e_worst, std::isinf(p_worst) ? std::string("inf") : fmt::format("{:.4f}", p_worst),
                      evader_wins, pursuer_wins)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"value reproduction from alpha=1", value_reproduction},
      {"dispersal epsilon-gap from alpha=pi", dispersal_gap},
      {"rate-of-loss saddle at alpha=pi", saddle_at_pi},
      {"boundary endpoints and simultaneous arrival", delta_endpoints},
      {"intercept on/outside dichotomy", intercept_dichotomy},
      {"alpha_rate first-order convergence", kinematics_convergence},
      {"two-pursuer joint intercept", two_pursuer_joint},
      {"guarding containment", guarding_containment},
      {"saddle inequality under deviations", saddle_inequality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    fmt::print("{} [{}] {}: {}\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
    failures += o.pass ? 0 : 1;
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
