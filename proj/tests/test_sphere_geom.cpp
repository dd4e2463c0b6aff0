#include "sphere_game/sphere_geom.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace sphere_game;
using doctest::Approx;

namespace {

bool near(const Vec3& a, const Vec3& b, double tol) { return (a - b).norm() <= tol; }

SurfacePoint north(double R = 1.0) { return SurfacePoint(Vec3(0, 0, R), R); }

}  // namespace

TEST_SUITE("sphere_geom") {

TEST_CASE("from_spherical places poles and equator") {
  CHECK(near(from_spherical(kPi / 2, 0.0, 1.0).position(), Vec3(0, 0, 1), 1e-15));
  CHECK(near(from_spherical(0.0, 0.0, 2.0).position(), Vec3(2, 0, 0), 1e-15));
}

TEST_CASE("from_spherical matches the position formula") {
  // mpmath at 40 digits.
  const Vec3 frozen(0.43333692612370317977, 0.85140291044399147114, 0.29552020666133957511);
  const Vec3 reference = oracle::lat_lon(0.3, 1.1, 1.0);
  CHECK(near(reference, frozen, 1e-15));
  CHECK(near(from_spherical(0.3, 1.1, GameParams{}).position(), frozen, 1e-15));
}

TEST_CASE("GameParams::make validates") {
  CHECK_NOTHROW(GameParams::make(1.0, 1.0, 0.5));
  CHECK_THROWS_AS(GameParams::make(0.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(GameParams::make(1.0, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(GameParams::make(1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GameParams::make(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GameParams::make(1.0, 1.0, 1.2), std::invalid_argument);
}

TEST_CASE("relative_config degenerate cases") {
  const SurfacePoint P = from_spherical(0.4, -0.7, 1.0);
  const RelativeConfig same = relative_config(P, P);
  CHECK(same.alpha == 0.0);
  CHECK(same.degenerate);
  CHECK_FALSE(same.frame.has_value());
  CHECK_THROWS_AS(same.require_frame(), std::invalid_argument);

  const SurfacePoint anti(-P.position(), 1.0);
  const RelativeConfig opposite = relative_config(P, anti);
  CHECK(opposite.alpha == kPi);
  CHECK(opposite.degenerate);
  CHECK_FALSE(opposite.frame.has_value());
}

TEST_CASE("relative_config frame at a right angle") {
  const SurfacePoint P = north();
  const SurfacePoint E(Vec3(1, 0, 0), 1.0);
  const RelativeConfig c = relative_config(P, E);
  CHECK(c.alpha == Approx(kPi / 2).epsilon(1e-15));
  REQUIRE_FALSE(c.degenerate);
  const GreatCircleFrame& f = c.require_frame();
  CHECK(near(f.n, Vec3(0, 1, 0), 1e-15));
  CHECK(near(f.t_P, Vec3(1, 0, 0), 1e-15));   // toward E
  CHECK(near(f.t_E, Vec3(0, 0, -1), 1e-15));  // away from P
}

TEST_CASE("relative_config rejects mixed radii") {
  CHECK_THROWS_AS(relative_config(north(1.0), north(2.0)), std::invalid_argument);
}

TEST_CASE("frame orientation and orthogonality on random pairs") {
  gen::Source src(11);
  for (int i = 0; i < 500; ++i) {
    const double R = src.uniform(0.1, 10.0);
    const SurfacePoint P = src.point(R);
    const SurfacePoint E = src.at_distance(P, src.uniform(1e-3, kPi - 1e-3));
    const RelativeConfig c = relative_config(P, E);
    REQUIRE_FALSE(c.degenerate);
    const GreatCircleFrame& f = c.require_frame();
    CHECK(std::abs(f.n.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(f.t_P.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(f.t_E.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(f.n.dot(f.t_P)) <= 1e-12);
    CHECK(std::abs(f.n.dot(f.t_E)) <= 1e-12);
    CHECK(std::abs(f.t_P.dot(P.unit())) <= 1e-12);
    CHECK(std::abs(f.t_E.dot(E.unit())) <= 1e-12);
    // Both tangents lie in the plane of the great circle, so they are
    // orthogonal only at alpha = pi/2.
    CHECK(f.t_P.dot(f.t_E) == Approx(std::cos(c.alpha)).epsilon(1e-12).scale(1.0));
    CHECK(f.t_P.dot(E.unit()) > 0.0);
    CHECK(f.t_E.dot(P.unit()) < 0.0);
  }
}

TEST_CASE("alpha is the geodesic distance and symmetric") {
  gen::Source src(12);
  for (int i = 0; i < 1000; ++i) {
    const double R = src.uniform(0.5, 5.0);
    const SurfacePoint P = src.point(R);
    const SurfacePoint E = src.point(R);
    const double alpha = relative_config(P, E).alpha;
    CHECK(alpha == Approx(relative_config(E, P).alpha).epsilon(1e-15).scale(1.0));
    CHECK(alpha * R == Approx(arc_length(P, E)).epsilon(1e-14).scale(R));
    if (alpha > 1e-4 && alpha < kPi - 1e-4) {
      CHECK(alpha == Approx(oracle::angle(P.position(), E.position())).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("alpha stays accurate near 0 and pi") {
  const SurfacePoint P = north();
  const SurfacePoint close(Vec3(std::sin(1e-9), 0, std::cos(1e-9)), 1.0);
  CHECK(relative_config(P, close).alpha == Approx(1e-9).epsilon(1e-6));
  const SurfacePoint far(Vec3(std::sin(1e-7), 0, -std::cos(1e-7)), 1.0);
  CHECK(kPi - relative_config(P, far).alpha == Approx(1e-7).epsilon(1e-6));
  CHECK_FALSE(relative_config(P, far).degenerate);
}

TEST_CASE("step_geodesic examples") {
  const SurfacePoint X = north(3.0);
  CHECK(step_geodesic(X, Vec3(1, 0, 0), 0.0) == X);
  CHECK(near(step_geodesic(X, Vec3(1, 0, 0), 3.0 * kPi / 2).position(), Vec3(3, 0, 0), 1e-14));

  gen::Source src(13);
  for (int i = 0; i < 100; ++i) {
    const double R = src.uniform(0.5, 5.0);
    const SurfacePoint Y = src.point(R);
    const Vec3 d = src.tangent(Y);
    CHECK(near(step_geodesic(Y, d, kTwoPi * R).position(), Y.position(), 1e-9 * R));
  }
}

TEST_CASE("step_geodesic rejects bad directions") {
  const SurfacePoint X = north();
  CHECK_THROWS_AS(step_geodesic(X, Vec3(0, 0, 1), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(step_geodesic(X, Vec3(1, 0, 1e-6).normalized(), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(step_geodesic(X, Vec3(2, 0, 0), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(step_geodesic(X, Vec3(1, 0, 0), -0.1), std::invalid_argument);
}

TEST_CASE("step_geodesic agrees with Rodrigues rotation and keeps the radius") {
  gen::Source src(14);
  for (int i = 0; i < 1000; ++i) {
    const double R = src.uniform(0.1, 20.0);
    const SurfacePoint X = src.point(R);
    const Vec3 d = src.tangent(X);
    const double arc = src.uniform(0.0, 3.0 * kPi * R);
    const SurfacePoint Y = step_geodesic(X, d, arc);
    CHECK(std::abs(Y.position().norm() - R) <= 1e-12 * R);
    CHECK(near(Y.position(), oracle::geodesic(X.position(), d, arc), 1e-12 * R));
    const double moved = std::fmod(arc / R, kTwoPi);
    const double expected = moved <= kPi ? moved : kTwoPi - moved;
    CHECK(arc_length(X, Y) == Approx(expected * R).epsilon(1e-10).scale(R));
  }
}

TEST_CASE("step_geodesic composes along the transported direction") {
  gen::Source src(15);
  for (int i = 0; i < 1000; ++i) {
    const double R = src.uniform(0.5, 5.0);
    const SurfacePoint X = src.point(R);
    const Vec3 d = src.tangent(X);
    const double a = src.uniform(0.0, 0.99 * kPi * R);
    const double b = src.uniform(0.0, 0.99 * kPi * R - a);
    const SurfacePoint mid = step_geodesic(X, d, a);
    const SurfacePoint two_steps = step_geodesic(mid, transported_direction(X, d, a), b);
    const SurfacePoint one_step = step_geodesic(X, d, a + b);
    CHECK(near(two_steps.position(), one_step.position(), 1e-10 * R));
  }
}

TEST_CASE("heading_to_velocity examples") {
  const SurfacePoint P = north();
  const SurfacePoint E(Vec3(1, 0, 0), 1.0);
  const RelativeConfig c = relative_config(P, E);
  const GreatCircleFrame& f = c.require_frame();
  CHECK(near(heading_to_velocity(P, c, 0.0, 2.0), 2.0 * f.t_P, 1e-15));
  CHECK(near(heading_to_velocity(P, c, kPi / 2, 2.0), 2.0 * f.n, 1e-15));
  CHECK(near(heading_to_velocity(P, c, kPi, 1.0), -f.t_P, 1e-15));
  CHECK(near(heading_to_velocity(E, c, 0.0, 1.0), f.t_E, 1e-15));

  const RelativeConfig degenerate = relative_config(P, SurfacePoint(Vec3(0, 0, -1), 1.0));
  CHECK_THROWS_AS(heading_to_velocity(P, degenerate, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(heading_to_velocity(P, c, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("heading_to_velocity is tangent with the requested speed; heading_of inverts it") {
  gen::Source src(16);
  for (int i = 0; i < 1000; ++i) {
    const double R = src.uniform(0.5, 5.0);
    const SurfacePoint P = src.point(R);
    const SurfacePoint E = src.at_distance(P, src.uniform(0.01, kPi - 0.01));
    const RelativeConfig c = relative_config(P, E);
    const double u = src.uniform(0.0, kTwoPi);
    const double speed = src.uniform(0.0, 3.0);
    for (const SurfacePoint* X : {&P, &E}) {
      const Vec3 v = heading_to_velocity(*X, c, u, speed);
      CHECK(std::abs(v.dot(X->unit())) <= 1e-12 * std::max(1.0, speed));
      CHECK(v.norm() == Approx(speed).epsilon(1e-12).scale(1.0));
      if (speed > 1e-3) {
        const double back = heading_of(*X, c, v);
        CHECK(std::abs(wrap_pi(back - u)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("tangent_toward and wrapping") {
  const SurfacePoint X = north();
  CHECK(near(tangent_toward(X, Vec3(1, 0, 5)), Vec3(1, 0, 0), 1e-15));
  CHECK_THROWS_AS(tangent_toward(X, Vec3(0, 0, 2)), std::invalid_argument);

  CHECK(wrap_two_pi(-0.5) == Approx(kTwoPi - 0.5));
  CHECK(wrap_two_pi(kTwoPi) == 0.0);
  CHECK(wrap_pi(kPi) == Approx(-kPi));
  CHECK(wrap_pi(-kPi) == Approx(-kPi));
  CHECK(wrap_pi(3 * kPi + 0.25) == Approx(-kPi + 0.25));
  gen::Source src(17);
  for (int i = 0; i < 1000; ++i) {
    const double a = src.uniform(-50.0, 50.0);
    const double w = wrap_pi(a);
    CHECK(w >= -kPi);
    CHECK(w < kPi);
    CHECK(std::abs(std::remainder(w - a, kTwoPi)) <= 1e-12);
  }
}

TEST_CASE("SurfacePoint projects onto its radius") {
  const SurfacePoint X(Vec3(3, 4, 0), 2.0);
  CHECK(X.position().norm() == Approx(2.0).epsilon(1e-15));
  CHECK(X.radius() == 2.0);
}

}  // TEST_SUITE
