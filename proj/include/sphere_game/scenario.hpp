#pragma once

// Scenario documents: one JSON object per run.
//
//   {
//     "mode": "simulate" | "apollonius" | "intercept" | "two_pursuer" | "guard",
//     "params":  {"R": 1, "v_P": 1, "mu": 0.5},          // all modes but two_pursuer
//     "pursuer": {"phi": <lat>, "theta": <lon>},
//     "evader":  {"phi": <lat>, "theta": <lon>},
//     "<mode>":  { mode-specific settings }
//   }
//
// Angles are radians when given as numbers. Strings with an explicit unit
// suffix ("30deg", "0.5rad") are accepted on input; emit() always writes radians.
// Unknown keys are rejected. Every default is written back by emit() so a
// parsed-then-emitted document is self-describing.

#include "sphere_game/apollonius.hpp"
#include "sphere_game/engagements.hpp"
#include "sphere_game/sim_engine.hpp"
#include "sphere_game/sphere_geom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sphere_game {

enum class Mode { simulate, apollonius, intercept, two_pursuer, guard };

std::string_view to_string(Mode mode);
/// Accepts both the document spelling ("two_pursuer") and the CLI spelling ("two-pursuer").
std::optional<Mode> mode_from_string(std::string_view name);

struct LatLon {
  double phi = 0.0;    ///< latitude in [-pi/2, pi/2]
  double theta = 0.0;  ///< longitude in [-pi, pi]

  bool operator==(const LatLon&) const = default;
};

struct SimulateSettings {
  double dt = 1e-3;
  double max_time = 0.0;  ///< filled with 4 value(pi) when absent
  double capture_tolerance = kDefaultCaptureTolerance;
  double tie_break = 0.0;

  bool operator==(const SimulateSettings&) const = default;
};

struct ApolloniusSettings {
  std::size_t n_samples = kDefaultBoundarySamples;
  /// Optional sweep. When non-empty the agents are placed canonically: evader
  /// at the north pole, pursuer at colatitude alpha on longitude 0.
  std::vector<double> alphas;

  bool operator==(const ApolloniusSettings&) const = default;
};

struct InterceptSettings {
  std::size_t n_samples = kDefaultBoundarySamples;
  double boundary_tolerance = 1e-6;  ///< relative to R

  bool operator==(const InterceptSettings&) const = default;
};

struct TwoPursuerSettings {
  TwoPursuerConfig config;
  std::size_t n_samples = kDefaultBoundarySamples;

  bool operator==(const TwoPursuerSettings&) const = default;
};

struct GuardSettings {
  LatLon target_center;
  double target_radius = 0.1;  ///< angular radius of the cap
  std::size_t n_samples = kDefaultBoundarySamples;
  /// Random polyline playouts against the geodesic parallel strategy.
  std::size_t playouts = 0;
  std::uint64_t seed = 1;
  double dt = 1e-3;
  double capture_tolerance = 1e-6;

  bool operator==(const GuardSettings&) const = default;
};

struct Scenario {
  Mode mode = Mode::simulate;
  std::optional<GameParams> params;
  std::optional<LatLon> pursuer;
  std::optional<LatLon> evader;
  std::optional<SimulateSettings> simulate;
  std::optional<ApolloniusSettings> apollonius;
  std::optional<InterceptSettings> intercept;
  std::optional<TwoPursuerSettings> two_pursuer;
  std::optional<GuardSettings> guard;

  bool operator==(const Scenario&) const = default;
};

/// Throws ParseError naming the offending key path.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Canonical JSON form with all defaults explicit.
std::string emit_scenario(const Scenario& s);

}  // namespace sphere_game
