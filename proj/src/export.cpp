#include "sphere_game/export.hpp"

#include "sphere_game/strategies.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

namespace sphere_game {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const SurfacePoint& X) {
  return {{"x", X.x()}, {"y", X.y()}, {"z", X.z()}};
}

ordered_json params_json(const GameParams& p) {
  return {{"R", p.R}, {"v_P", p.v_P}, {"mu", p.mu}, {"v_E", p.max_evader_speed()}};
}

ordered_json optional_json(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

void dump(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

void write_boundary_csv(std::ostream& out, const ApolloniusBoundary& b) {
  out << "lambda_rad,delta,x,y,z,arrival_time\n";
  for (const BoundarySample& s : b.samples()) {
    fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", s.lambda, s.delta,
               s.point.x(), s.point.y(), s.point.z(), s.time);
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,Px,Py,Pz,Ex,Ey,Ez,alpha,u_P,u_E,v_E\n";
  for (const TrajectoryStep& s : traj.steps) {
    fmt::print(out,
               "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
               "{:.17g}\n",
               s.t, s.P.x(), s.P.y(), s.P.z(), s.E.x(), s.E.y(), s.E.z(), s.alpha, s.ctrl.u_P,
               s.ctrl.u_E, s.ctrl.v_E);
  }
}

void write_trajectory_json(std::ostream& out, const Trajectory& traj, const GameParams& params) {
  ordered_json doc;
  doc["params"] = params_json(params);
  doc["dt"] = traj.dt;
  doc["capture_tolerance"] = traj.capture_tolerance;
  doc["tie_break"] = traj.tie_break;
  doc["captured"] = traj.capture_time.has_value();
  doc["capture_time"] = optional_json(traj.capture_time);
  doc["capped"] = traj.capped;
  doc["step_count"] = traj.step_count();
  ordered_json steps = ordered_json::array();
  for (const TrajectoryStep& s : traj.steps) {
    steps.push_back({{"t", s.t},
                     {"Px", s.P.x()},
                     {"Py", s.P.y()},
                     {"Pz", s.P.z()},
                     {"Ex", s.E.x()},
                     {"Ey", s.E.y()},
                     {"Ez", s.E.z()},
                     {"alpha", s.alpha},
                     {"u_P", s.ctrl.u_P},
                     {"u_E", s.ctrl.u_E},
                     {"v_E", s.ctrl.v_E}});
  }
  doc["steps"] = std::move(steps);
  dump(out, doc);
}

InterceptRecord make_intercept_record(const ApolloniusBoundary& b, double boundary_tolerance) {
  const InterceptPoint ip = intercept_point(b.pursuer(), b.evader(), b.params());
  return InterceptRecord{b.alpha(), critical_alpha(b.params()), ip,
                         distance_to_boundary(ip.point, b),
                         classify(ip.point, b, boundary_tolerance * b.params().R)};
}

void write_intercept_json(std::ostream& out, const InterceptRecord& r, const GameParams& params) {
  ordered_json doc;
  doc["params"] = params_json(params);
  doc["alpha"] = r.alpha;
  doc["critical_alpha"] = r.critical_alpha;
  doc["value"] = r.intercept.time;
  doc["intercept"] = point_json(r.intercept.point);
  doc["arc_from_evader"] = r.intercept.arc_from_evader;
  doc["distance_to_boundary"] = r.distance_to_boundary;
  doc["classification"] = to_string(r.classification);
  dump(out, doc);
}

void write_engagement_json(std::ostream& out, const InterceptResult& result,
                           const TwoPursuerConfig& cfg) {
  ordered_json doc;
  doc["config"] = {{"radius", cfg.radius},   {"evader_speed", cfg.evader_speed},
                   {"alpha_1", cfg.alpha_1}, {"alpha_2", cfg.alpha_2},
                   {"lambda_o", cfg.lambda_o}, {"mu_1", cfg.mu_1},
                   {"mu_2", cfg.mu_2}};
  doc["case_tag"] = to_string(result.case_tag);
  doc["intercept"] = point_json(result.point);
  doc["time"] = result.time;
  doc["arrival_times"] = {{"E", result.arrival_times[0]},
                          {"P1", result.arrival_times[1]},
                          {"P2", result.arrival_times[2]}};
  doc["pursuer_distances"] = {{"P1", result.pursuer_distances[0]},
                              {"P2", result.pursuer_distances[1]}};
  doc["diagnostic"] = result.diagnostic ? ordered_json(*result.diagnostic) : ordered_json(nullptr);
  dump(out, doc);
}

void write_guard_json(std::ostream& out, const GuardVerdict& v, const GameParams& params) {
  ordered_json doc;
  doc["params"] = params_json(params);
  doc["alpha"] = v.alpha;
  doc["alpha_threshold"] = v.alpha_threshold;
  doc["target_distance"] = v.target_distance;
  doc["evader_wins"] = v.evader_wins;
  doc["pursuer_wins"] = v.pursuer_wins;
  ordered_json playouts = ordered_json::array();
  for (const PlayoutSummary& p : v.playouts) {
    playouts.push_back({{"seed", p.seed},
                        {"capture_time", optional_json(p.capture_time)},
                        {"capture_bound", p.capture_bound},
                        {"checkpoints", p.checkpoints},
                        {"escapes", p.escapes}});
  }
  doc["playouts"] = std::move(playouts);
  dump(out, doc);
}

}  // namespace sphere_game
