#include "sphere_game/execute.hpp"

#include "sphere_game/errors.hpp"
#include "sphere_game/export.hpp"
#include "sphere_game/strategies.hpp"

#include <fmt/format.h>

#include <fstream>
#include <functional>
#include <stdexcept>

namespace sphere_game {

namespace {

class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    body(out);
    out.flush();
    if (!out) {
      throw std::runtime_error("write failed for " + path.string());
    }
    files_.push_back(path);
  }

  std::vector<std::filesystem::path> take_files() { return std::move(files_); }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> files_;
};

SurfacePoint place(const LatLon& p, const GameParams& params) {
  return from_spherical(p.phi, p.theta, params);
}

void run_simulate(const Scenario& s, ArtifactWriter& out) {
  const GameParams& params = *s.params;
  const SimulateSettings& cfg = *s.simulate;
  RunOptions options;
  options.dt = cfg.dt;
  options.max_time = cfg.max_time;
  options.capture_tolerance = cfg.capture_tolerance;
  options.tie_break = cfg.tie_break;
  const Trajectory traj = run(place(*s.pursuer, params), place(*s.evader, params),
                              equilibrium_pursuer(), equilibrium_evader(params), options, params);
  out.write("trajectory.csv", [&](std::ostream& o) { write_trajectory_csv(o, traj); });
  out.write("trajectory.json", [&](std::ostream& o) { write_trajectory_json(o, traj, params); });
}

void write_domain(const SurfacePoint& P, const SurfacePoint& E, const GameParams& params,
                  std::size_t n_samples, const std::string& suffix, ArtifactWriter& out) {
  const ApolloniusBoundary b = boundary(P, E, params, n_samples);
  const InterceptRecord record = make_intercept_record(b, InterceptSettings{}.boundary_tolerance);
  out.write("boundary" + suffix + ".csv", [&](std::ostream& o) { write_boundary_csv(o, b); });
  out.write("intercept" + suffix + ".json",
            [&](std::ostream& o) { write_intercept_json(o, record, params); });
}

void run_apollonius(const Scenario& s, ArtifactWriter& out) {
  const GameParams& params = *s.params;
  const ApolloniusSettings& cfg = *s.apollonius;
  if (cfg.alphas.empty()) {
    write_domain(place(*s.pursuer, params), place(*s.evader, params), params, cfg.n_samples, "",
                 out);
    return;
  }
  const SurfacePoint E = from_spherical(0.5 * kPi, 0.0, params);
  for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
    const SurfacePoint P = from_spherical(0.5 * kPi - cfg.alphas[i], 0.0, params);
    write_domain(P, E, params, cfg.n_samples, fmt::format("_{}", i), out);
  }
}

void run_intercept(const Scenario& s, ArtifactWriter& out) {
  const GameParams& params = *s.params;
  const ApolloniusBoundary b =
      boundary(place(*s.pursuer, params), place(*s.evader, params), params, s.intercept->n_samples);
  const InterceptRecord record = make_intercept_record(b, s.intercept->boundary_tolerance);
  out.write("intercept.json", [&](std::ostream& o) { write_intercept_json(o, record, params); });
}

void run_two_pursuer(const Scenario& s, ArtifactWriter& out) {
  const TwoPursuerSettings& cfg = *s.two_pursuer;
  const TwoPursuerConfig& c = cfg.config;
  const InterceptResult result = two_pursuer_intercept(c, cfg.n_samples);
  const SurfacePoint E = c.evader_position();
  for (int which : {1, 2}) {
    const ApolloniusBoundary b =
        boundary(c.pursuer_position(which), E, c.pursuer_params(which), cfg.n_samples);
    out.write(fmt::format("boundary_P{}.csv", which),
              [&](std::ostream& o) { write_boundary_csv(o, b); });
  }
  out.write("engagement.json", [&](std::ostream& o) { write_engagement_json(o, result, c); });
}

void run_guard(const Scenario& s, ArtifactWriter& out) {
  const GameParams& params = *s.params;
  const GuardSettings& cfg = *s.guard;
  const SurfacePoint P = place(*s.pursuer, params);
  const SurfacePoint E = place(*s.evader, params);
  const ApolloniusBoundary b = boundary(P, E, params, cfg.n_samples);
  const TargetRegion target{place(cfg.target_center, params), cfg.target_radius};

  GuardVerdict verdict;
  verdict.alpha = b.alpha();
  verdict.alpha_threshold = guarding_alpha_threshold(params);
  verdict.target_distance = contains(b, target.center) ? 0.0 : distance_to_boundary(target.center, b);
  verdict.evader_wins = evader_wins_guarding(b, target);
  verdict.pursuer_wins = pursuer_wins_guarding(b, target, b.alpha(), params);
  for (std::size_t i = 0; i < cfg.playouts; ++i) {
    GuardingPlayoutOptions options;
    options.run.dt = cfg.dt;
    options.run.capture_tolerance = cfg.capture_tolerance;
    options.seed = cfg.seed + i;
    options.n_samples = cfg.n_samples;
    const GuardingPlayout p = guarding_playout(P, E, params, options);
    verdict.playouts.push_back(PlayoutSummary{options.seed, p.trajectory.capture_time,
                                              p.capture_bound, p.checkpoints, p.escapes});
  }
  out.write("boundary.csv", [&](std::ostream& o) { write_boundary_csv(o, b); });
  out.write("guard.json", [&](std::ostream& o) { write_guard_json(o, verdict, params); });
}

}  // namespace

ExecutionResult execute(const Scenario& s, const std::filesystem::path& out_dir) {
  ExecutionResult result;
  try {
    ArtifactWriter out(out_dir);
    out.write("scenario.json", [&](std::ostream& o) { o << emit_scenario(s); });
    switch (s.mode) {
      case Mode::simulate:
        run_simulate(s, out);
        break;
      case Mode::apollonius:
        run_apollonius(s, out);
        break;
      case Mode::intercept:
        run_intercept(s, out);
        break;
      case Mode::two_pursuer:
        run_two_pursuer(s, out);
        break;
      case Mode::guard:
        run_guard(s, out);
        break;
    }
    result.files = out.take_files();
  } catch (const NumericalBreakdown& e) {
    result.exit_code = kExitNumerical;
    result.message = e.what();
  } catch (const std::exception& e) {
    result.exit_code = kExitUsage;
    result.message = e.what();
  }
  return result;
}

}  // namespace sphere_game
