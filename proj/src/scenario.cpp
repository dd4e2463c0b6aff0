#include "sphere_game/scenario.hpp"

#include "sphere_game/errors.hpp"
#include "sphere_game/strategies.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace sphere_game {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::simulate:
      return "simulate";
    case Mode::apollonius:
      return "apollonius";
    case Mode::intercept:
      return "intercept";
    case Mode::two_pursuer:
      return "two_pursuer";
    case Mode::guard:
      return "guard";
  }
  return "unknown";
}

std::optional<Mode> mode_from_string(std::string_view name) {
  if (name == "simulate") return Mode::simulate;
  if (name == "apollonius") return Mode::apollonius;
  if (name == "intercept") return Mode::intercept;
  if (name == "two_pursuer" || name == "two-pursuer") return Mode::two_pursuer;
  if (name == "guard") return Mode::guard;
  return std::nullopt;
}

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double parse_angle_string(const std::string& text, const std::string& path) {
  std::string_view s(text);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double scale = 0.0;
  if (s.ends_with("deg")) {
    scale = kPi / 180.0;
    s.remove_suffix(3);
  } else if (s.ends_with("rad")) {
    scale = 1.0;
    s.remove_suffix(3);
  } else {
    throw ParseError(path, "angle strings need a unit suffix (deg or rad), got '" + text + "'");
  }
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  double number = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError(path, "malformed angle '" + text + "'");
  }
  return number * scale;
}

// Reads one JSON object, remembering which keys were consumed so leftovers
// can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) {
      throw ParseError(path_, "expected an object");
    }
  }

  bool has(const std::string& key) const { return object_.contains(key); }

  const json* child(const std::string& key) {
    seen_.insert(key);
    const auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  std::string path(const std::string& key) const { return join(path_, key); }

  std::optional<double> number(const std::string& key) {
    const json* v = child(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number()) throw ParseError(path(key), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) throw ParseError(path(key), "must be finite");
    return x;
  }

  double required_number(const std::string& key) {
    const auto x = number(key);
    if (!x) throw ParseError(path(key), "missing required key");
    return *x;
  }

  std::optional<double> angle(const std::string& key) {
    const json* v = child(key);
    if (v == nullptr) return std::nullopt;
    if (v->is_number()) {
      const double x = v->get<double>();
      if (!std::isfinite(x)) throw ParseError(path(key), "must be finite");
      return x;
    }
    if (v->is_string()) return parse_angle_string(v->get<std::string>(), path(key));
    throw ParseError(path(key), "expected an angle (number in radians or string with unit)");
  }

  double required_angle(const std::string& key) {
    const auto x = angle(key);
    if (!x) throw ParseError(path(key), "missing required key");
    return *x;
  }

  std::optional<std::uint64_t> unsigned_integer(const std::string& key) {
    const json* v = child(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
      throw ParseError(path(key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
  }

  void finish() const {
    for (const auto& item : object_.items()) {
      if (!seen_.contains(item.key())) {
        throw ParseError(join(path_, item.key()), "unknown key");
      }
    }
  }

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw ParseError(path, message);
}

GameParams read_params(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  GameParams p;
  p.R = r.required_number("R");
  p.v_P = r.required_number("v_P");
  p.mu = r.required_number("mu");
  r.finish();
  require(p.R > 0.0, r.path("R"), "must be positive");
  require(p.v_P > 0.0, r.path("v_P"), "must be positive");
  require(p.mu > 0.0 && p.mu < 1.0, r.path("mu"), "must lie in (0, 1)");
  return p;
}

LatLon read_latlon(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  LatLon p;
  p.phi = r.required_angle("phi");
  p.theta = r.required_angle("theta");
  r.finish();
  require(p.phi >= -0.5 * kPi && p.phi <= 0.5 * kPi, r.path("phi"),
          "latitude must lie in [-pi/2, pi/2]");
  require(p.theta >= -kPi && p.theta <= kPi, r.path("theta"), "longitude must lie in [-pi, pi]");
  return p;
}

std::size_t read_samples(ObjectReader& r, std::size_t minimum) {
  const auto n = r.unsigned_integer("n_samples").value_or(kDefaultBoundarySamples);
  require(n >= minimum, r.path("n_samples"), "must be at least " + std::to_string(minimum));
  return static_cast<std::size_t>(n);
}

SimulateSettings read_simulate(const json* j, const std::string& path, const GameParams& params) {
  SimulateSettings s;
  s.max_time = 4.0 * value(kPi, params);
  if (j == nullptr) return s;
  ObjectReader r(*j, path);
  s.dt = r.number("dt").value_or(s.dt);
  s.max_time = r.number("max_time").value_or(s.max_time);
  s.capture_tolerance = r.angle("capture_tolerance").value_or(s.capture_tolerance);
  s.tie_break = r.angle("tie_break").value_or(s.tie_break);
  r.finish();
  require(s.dt > 0.0, r.path("dt"), "must be positive");
  require(s.max_time > 0.0, r.path("max_time"), "must be positive");
  require(s.capture_tolerance > 0.0 && s.capture_tolerance < kPi, r.path("capture_tolerance"),
          "must lie in (0, pi)");
  return s;
}

ApolloniusSettings read_apollonius(const json* j, const std::string& path) {
  ApolloniusSettings s;
  if (j == nullptr) return s;
  ObjectReader r(*j, path);
  s.n_samples = read_samples(r, 8);
  if (const json* list = r.child("alphas")) {
    require(list->is_array(), r.path("alphas"), "expected an array");
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string item_path = r.path("alphas") + "[" + std::to_string(i) + "]";
      const json& item = (*list)[i];
      double a = 0.0;
      if (item.is_number()) {
        a = item.get<double>();
      } else if (item.is_string()) {
        a = parse_angle_string(item.get<std::string>(), item_path);
      } else {
        throw ParseError(item_path, "expected an angle");
      }
      require(a > 0.0 && a < kPi, item_path, "must lie in (0, pi)");
      s.alphas.push_back(a);
    }
  }
  r.finish();
  return s;
}

InterceptSettings read_intercept(const json* j, const std::string& path) {
  InterceptSettings s;
  if (j == nullptr) return s;
  ObjectReader r(*j, path);
  s.n_samples = read_samples(r, 8);
  s.boundary_tolerance = r.number("boundary_tolerance").value_or(s.boundary_tolerance);
  r.finish();
  require(s.boundary_tolerance > 0.0, r.path("boundary_tolerance"), "must be positive");
  return s;
}

TwoPursuerSettings read_two_pursuer(const json* j, const std::string& path) {
  if (j == nullptr) throw ParseError(path, "missing required block");
  ObjectReader r(*j, path);
  TwoPursuerSettings s;
  TwoPursuerConfig& c = s.config;
  c.radius = r.number("radius").value_or(c.radius);
  c.evader_speed = r.number("evader_speed").value_or(c.evader_speed);
  c.alpha_1 = r.required_angle("alpha_1");
  c.alpha_2 = r.required_angle("alpha_2");
  c.lambda_o = r.required_angle("lambda_o");
  c.mu_1 = r.required_number("mu_1");
  c.mu_2 = r.required_number("mu_2");
  s.n_samples = read_samples(r, 361);
  r.finish();
  require(c.radius > 0.0, r.path("radius"), "must be positive");
  require(c.evader_speed > 0.0, r.path("evader_speed"), "must be positive");
  require(c.mu_1 > 0.0 && c.mu_1 < 1.0, r.path("mu_1"), "must lie in (0, 1)");
  require(c.mu_2 > 0.0 && c.mu_2 < 1.0, r.path("mu_2"), "must lie in (0, 1)");
  require(c.alpha_1 > 0.0 && c.alpha_1 < kPi, r.path("alpha_1"), "must lie in (0, pi)");
  require(c.alpha_2 > 0.0 && c.alpha_2 < kPi, r.path("alpha_2"), "must lie in (0, pi)");
  require(c.lambda_o >= -kPi && c.lambda_o <= kPi, r.path("lambda_o"), "must lie in [-pi, pi]");
  return s;
}

GuardSettings read_guard(const json* j, const std::string& path) {
  if (j == nullptr) throw ParseError(path, "missing required block");
  ObjectReader r(*j, path);
  GuardSettings s;
  const json* target = r.child("target");
  if (target == nullptr) throw ParseError(r.path("target"), "missing required key");
  {
    ObjectReader t(*target, r.path("target"));
    const json* center = t.child("center");
    if (center == nullptr) throw ParseError(t.path("center"), "missing required key");
    s.target_center = read_latlon(*center, t.path("center"));
    s.target_radius = t.required_angle("angular_radius");
    t.finish();
    require(s.target_radius > 0.0 && s.target_radius < kPi, t.path("angular_radius"),
            "must lie in (0, pi)");
  }
  s.n_samples = read_samples(r, 8);
  s.playouts = static_cast<std::size_t>(r.unsigned_integer("playouts").value_or(s.playouts));
  s.seed = r.unsigned_integer("seed").value_or(s.seed);
  s.dt = r.number("dt").value_or(s.dt);
  s.capture_tolerance = r.angle("capture_tolerance").value_or(s.capture_tolerance);
  r.finish();
  require(s.dt > 0.0, r.path("dt"), "must be positive");
  require(s.capture_tolerance > 0.0 && s.capture_tolerance < kPi, r.path("capture_tolerance"),
          "must lie in (0, pi)");
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed document: ") + e.what());
  }
  ObjectReader r(doc, "");
  Scenario s;

  const json* mode = r.child("mode");
  if (mode == nullptr) throw ParseError("mode", "missing required key");
  if (!mode->is_string()) throw ParseError("mode", "expected a string");
  const auto parsed_mode = mode_from_string(mode->get<std::string>());
  if (!parsed_mode) throw ParseError("mode", "unknown mode '" + mode->get<std::string>() + "'");
  s.mode = *parsed_mode;

  const auto only_for = [&](const char* key, Mode owner) {
    if (r.has(key) && s.mode != owner) {
      throw ParseError(key, std::string("not valid for mode ") + std::string(to_string(s.mode)));
    }
  };
  only_for("simulate", Mode::simulate);
  only_for("apollonius", Mode::apollonius);
  only_for("intercept", Mode::intercept);
  only_for("two_pursuer", Mode::two_pursuer);
  only_for("guard", Mode::guard);

  if (s.mode == Mode::two_pursuer) {
    for (const char* key : {"params", "pursuer", "evader"}) {
      if (r.has(key)) {
        throw ParseError(key, "two_pursuer scenarios carry their parameters in the two_pursuer block");
      }
    }
    s.two_pursuer = read_two_pursuer(r.child("two_pursuer"), "two_pursuer");
    r.finish();
    return s;
  }

  const json* params = r.child("params");
  if (params == nullptr) throw ParseError("params", "missing required key");
  s.params = read_params(*params, "params");
  if (const json* p = r.child("pursuer")) s.pursuer = read_latlon(*p, "pursuer");
  if (const json* e = r.child("evader")) s.evader = read_latlon(*e, "evader");

  bool agents_required = true;
  switch (s.mode) {
    case Mode::simulate:
      s.simulate = read_simulate(r.child("simulate"), "simulate", *s.params);
      break;
    case Mode::apollonius:
      s.apollonius = read_apollonius(r.child("apollonius"), "apollonius");
      if (!s.apollonius->alphas.empty()) {
        agents_required = false;
        if (s.pursuer || s.evader) {
          throw ParseError("apollonius.alphas",
                           "an alpha sweep places the agents itself; drop pursuer/evader");
        }
      }
      break;
    case Mode::intercept:
      s.intercept = read_intercept(r.child("intercept"), "intercept");
      break;
    case Mode::guard:
      s.guard = read_guard(r.child("guard"), "guard");
      break;
    case Mode::two_pursuer:
      break;
  }
  if (agents_required) {
    if (!s.pursuer) throw ParseError("pursuer", "missing required key");
    if (!s.evader) throw ParseError("evader", "missing required key");
  }
  r.finish();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("", "cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

namespace {

ordered_json latlon_json(const LatLon& p) { return {{"phi", p.phi}, {"theta", p.theta}}; }

}  // namespace

std::string emit_scenario(const Scenario& s) {
  ordered_json doc;
  doc["mode"] = std::string(to_string(s.mode));
  if (s.params) {
    doc["params"] = {{"R", s.params->R}, {"v_P", s.params->v_P}, {"mu", s.params->mu}};
  }
  if (s.pursuer) doc["pursuer"] = latlon_json(*s.pursuer);
  if (s.evader) doc["evader"] = latlon_json(*s.evader);
  if (s.simulate) {
    doc["simulate"] = {{"dt", s.simulate->dt},
                       {"max_time", s.simulate->max_time},
                       {"capture_tolerance", s.simulate->capture_tolerance},
                       {"tie_break", s.simulate->tie_break}};
  }
  if (s.apollonius) {
    ordered_json block;
    block["n_samples"] = s.apollonius->n_samples;
    if (!s.apollonius->alphas.empty()) block["alphas"] = s.apollonius->alphas;
    doc["apollonius"] = block;
  }
  if (s.intercept) {
    doc["intercept"] = {{"n_samples", s.intercept->n_samples},
                        {"boundary_tolerance", s.intercept->boundary_tolerance}};
  }
  if (s.two_pursuer) {
    const TwoPursuerConfig& c = s.two_pursuer->config;
    doc["two_pursuer"] = {{"radius", c.radius},       {"evader_speed", c.evader_speed},
                          {"alpha_1", c.alpha_1},     {"alpha_2", c.alpha_2},
                          {"lambda_o", c.lambda_o},   {"mu_1", c.mu_1},
                          {"mu_2", c.mu_2},           {"n_samples", s.two_pursuer->n_samples}};
  }
  if (s.guard) {
    const GuardSettings& g = *s.guard;
    doc["guard"] = {{"target",
                     {{"center", latlon_json(g.target_center)},
                      {"angular_radius", g.target_radius}}},
                    {"n_samples", g.n_samples},
                    {"playouts", g.playouts},
                    {"seed", g.seed},
                    {"dt", g.dt},
                    {"capture_tolerance", g.capture_tolerance}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace sphere_game
