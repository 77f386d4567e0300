#include "doctest.h"

#include <cmath>

#include "cw/arc_curve.hpp"
#include "cw/curves.hpp"
#include "cw/errors.hpp"
#include "cw/geometry.hpp"

using cw::kPi;
using cw::kTwoPi;
using cw::Vec2;

TEST_CASE("curvature: circle of radius r has curvature 1/r via the generic path") {
  const auto circle = cw::make_circle(2.0);  // radius 1
  for (double u : {0.0, 0.7, 2.2, 4.9}) {
    CHECK(std::abs(cw::curvature(*circle, u) - 1.0) < 1e-13);
  }
}

TEST_CASE("curvature: generic formula matches the profile closed form 1/(r + D/2)") {
  const std::vector<cw::TrigTerm> terms = {{3, 1.0 / 3, 0.2}};
  const auto curve = cw::make_constant_diameter(1.0, terms);
  // Same trigonometric data as a plain TrigCurve: no closed-form curvature,
  // so cw::curvature falls back to |g' x g''| / |g'|^3.
  const cw::TrigCurve generic(curve->series(), 1.0);
  for (int i = 0; i < 256; ++i) {
    const double u = kTwoPi * i / 256.0;
    const double expected = 1.0 / (curve->profile_value(u) + 0.5);
    CHECK(std::abs(cw::curvature(generic, u) - expected) < 1e-10);
    // The curve's own closed form is tighter still.
    CHECK(std::abs(cw::curvature(*curve, u) - expected) < 1e-14);
  }
}

TEST_CASE("curvature: generic path holds 1e-10 where the speed nearly vanishes") {
  // Profile amplitude 1/2.01 pushes the speed r + 1/2 down to ~2.5e-3, where
  // the cross/speed^3 formula amplifies derivative rounding by ~1.6e5. The
  // extended-precision evaluation inside cw::curvature has to absorb that.
  const std::vector<cw::TrigTerm> terms = {{5, 1.0 / 2.01, 0.0}};
  const auto curve = cw::make_constant_diameter(1.0, terms);
  const cw::TrigCurve generic(curve->series(), 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1024; ++i) {
    const double u = kTwoPi * i / 1024.0;
    const double expected = 1.0 / (curve->profile_value(u) + 0.5);
    worst = std::max(worst, std::abs(cw::curvature(generic, u) - expected));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("curvature throws SingularPoint at a cusp") {
  // Cardioid (1 + cos u)(cos u, sin u) as a trigonometric polynomial; its
  // derivative vanishes at u = pi.
  cw::TrigSeries2 s;
  s.x.add(0, 0.0, 0.5);
  s.x.add(1, 0.0, 1.0);
  s.x.add(2, 0.0, 0.5);
  s.y.add(1, 1.0, 0.0);
  s.y.add(2, 0.5, 0.0);
  const cw::TrigCurve cardioid(s, 2.0);
  CHECK_THROWS_AS(cw::curvature(cardioid, kPi), cw::SingularPoint);
  CHECK_NOTHROW(cw::curvature(cardioid, 0.0));
}

TEST_CASE("perimeter: circle, constant-diameter curves, Reuleaux") {
  CHECK(std::abs(cw::perimeter(*cw::make_circle(2.0)) - kTwoPi) < 1e-12);

  // Constant width D forces perimeter pi * D regardless of the profile.
  const auto c1 = cw::make_constant_diameter(1.0, {{3, 1.0 / 3, 0.2}});
  const auto c2 = cw::make_constant_diameter(1.0, {{5, 1.0 / 2.01, 0.0}});
  CHECK(std::abs(cw::perimeter(*c1) - kPi) < 1e-12);
  CHECK(std::abs(cw::perimeter(*c2) - kPi) < 1e-12);

  const auto reuleaux = cw::make_reuleaux(3, 1.0);
  CHECK(std::abs(cw::perimeter(*reuleaux) - kPi) < 1e-13);
  CHECK(std::abs(cw::perimeter_quadrature(*reuleaux) - kPi) < 1e-10);
}

TEST_CASE("width: circle and ellipse extents") {
  const auto circle = cw::make_circle(1.0);
  for (int k = 0; k < 8; ++k) {
    const double a = kTwoPi * k / 8.0;
    CHECK(std::abs(cw::width(*circle, {std::cos(a), std::sin(a)}) - 1.0) < 1e-12);
  }
  const auto ellipse = cw::make_ellipse(1.0, 0.6);
  CHECK(std::abs(cw::width(*ellipse, {1.0, 0.0}) - 2.0) < 1e-12);
  CHECK(std::abs(cw::width(*ellipse, {0.0, 1.0}) - 1.2) < 1e-12);
  // Width of an ellipse along direction angle a: 2 sqrt(a^2 cos^2 + b^2 sin^2).
  const double a = 0.9;
  const double expect = 2.0 * std::sqrt(std::cos(a) * std::cos(a) +
                                        0.36 * std::sin(a) * std::sin(a));
  CHECK(std::abs(cw::width(*ellipse, {std::cos(a), std::sin(a)}) - expect) < 1e-10);
}

TEST_CASE("width is constant across directions for a constant-width curve") {
  const auto curve = cw::make_constant_diameter(1.0, {{3, 0.1, 0.0}, {7, 0.0, 1.0 / 2.501}});
  double worst = 0.0;
  for (int k = 0; k < 32; ++k) {
    const double a = kTwoPi * k / 32.0;
    worst = std::max(worst, std::abs(cw::width(*curve, {std::cos(a), std::sin(a)}) - 1.0));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("chord and ChordFunction agree and peak at the half turn") {
  const auto circle = cw::make_circle(1.0);
  for (double phi : {0.3, 1.0, 2.0, kPi}) {
    const double expect = std::sin(phi / 2.0);  // radius 1/2 circle
    CHECK(std::abs(cw::chord(*circle, 0.4, phi) - expect) < 1e-14);
  }
  const auto curve = cw::make_constant_diameter(1.0, {{3, 1.0 / 3, 0.2}});
  const cw::ChordFunction f{curve.get(), 0.7};
  CHECK(std::abs(f(kPi) - 1.0) < 1e-14);
  CHECK(std::abs(f(1.1) - cw::chord(*curve, 0.7, 1.1)) < 1e-15);
  // The half turn is the unique global maximum.
  for (int j = 1; j < 64; ++j) {
    const double phi = kPi * j / 64.0;
    CHECK(f(phi) < 1.0);
    CHECK(f(kTwoPi - phi) < 1.0);
  }
}

TEST_CASE("nearest_point: on-curve, inside and outside queries") {
  const auto circle = cw::make_circle(2.0);  // radius 1 about the origin
  const cw::NearestPoint a = cw::nearest_point(*circle, {0.9, 0.0});
  CHECK(std::abs(a.dist - 0.1) < 1e-9);
  const cw::NearestPoint b = cw::nearest_point(*circle, {0.0, -3.0});
  CHECK(std::abs(b.dist - 2.0) < 1e-9);
  CHECK(std::abs(circle->eval(b.param).y - (-1.0)) < 1e-6);

  const auto curve = cw::make_constant_diameter(1.0, {{5, 1.0 / 2.01, 0.0}});
  const double u0 = 1.234;
  const cw::NearestPoint c = cw::nearest_point(*curve, curve->eval(u0));
  CHECK(c.dist < 1e-9);
  CHECK(std::abs(c.param - u0) < 1e-6);
}
