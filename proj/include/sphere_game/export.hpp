#pragma once

// Text exports. Every number is written with 17 significant digits so files
// round-trip doubles exactly and are byte-identical across runs.

#include "sphere_game/apollonius.hpp"
#include "sphere_game/engagements.hpp"
#include "sphere_game/sim_engine.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace sphere_game {

/// Columns: lambda_rad,delta,x,y,z,arrival_time
void write_boundary_csv(std::ostream& out, const ApolloniusBoundary& b);

/// Columns: t,Px,Py,Pz,Ex,Ey,Ez,alpha,u_P,u_E,v_E
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Metadata plus one record per step with the same fields as the CSV.
void write_trajectory_json(std::ostream& out, const Trajectory& traj, const GameParams& params);

struct InterceptRecord {
  double alpha;
  double critical_alpha;
  InterceptPoint intercept;
  double distance_to_boundary;
  InterceptClass classification;
};

InterceptRecord make_intercept_record(const ApolloniusBoundary& b, double boundary_tolerance);

void write_intercept_json(std::ostream& out, const InterceptRecord& record,
                          const GameParams& params);

void write_engagement_json(std::ostream& out, const InterceptResult& result,
                           const TwoPursuerConfig& cfg);

struct PlayoutSummary {
  std::uint64_t seed;
  std::optional<double> capture_time;
  double capture_bound;
  std::size_t checkpoints;
  std::size_t escapes;
};

struct GuardVerdict {
  double alpha;
  double alpha_threshold;
  double target_distance;  ///< arc from the target centre to the boundary, 0 if inside
  bool evader_wins;
  bool pursuer_wins;
  std::vector<PlayoutSummary> playouts;
};

void write_guard_json(std::ostream& out, const GuardVerdict& verdict, const GameParams& params);

}  // namespace sphere_game
