#include "doctest.h"

#include <cmath>
#include <vector>

#include "cw/curves.hpp"
#include "cw/errors.hpp"

using cw::kPi;
using cw::kTwoPi;
using cw::TrigTerm;
using cw::Vec2;

namespace {

double sup_on_grid(std::size_t n, auto&& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(f(kTwoPi * static_cast<double>(i) / static_cast<double>(n))));
  }
  return worst;
}

double profile_eval(const std::vector<TrigTerm>& terms, double theta) {
  double r = 0.0;
  for (const TrigTerm& t : terms) {
    r += t.a * std::sin(t.m * theta) + t.b * std::cos(t.m * theta);
  }
  return r;
}

}  // namespace

TEST_CASE("integrate_profile: closed form for the pure sin(3t) profile") {
  // r = sin(3t) integrates to G = (-sin(2t)/4 + sin(4t)/8, -cos(2t)/4 - cos(4t)/8).
  const cw::TrigSeries2 g = cw::integrate_profile({{3, 1.0, 0.0}});
  const Vec2 g0 = g.eval(0.0);
  CHECK(std::abs(g0.x - 0.0) < 1e-15);
  CHECK(std::abs(g0.y - (-0.375)) < 1e-15);
  const double worst = sup_on_grid(257, [&](double t) {
    const Vec2 v = g.eval(t);
    const double gx = -std::sin(2 * t) / 4 + std::sin(4 * t) / 8;
    const double gy = -std::cos(2 * t) / 4 - std::cos(4 * t) / 8;
    return std::max(std::abs(v.x - gx), std::abs(v.y - gy));
  });
  CHECK(worst < 1e-15);
}

TEST_CASE("integrate_profile: G' = r * (-sin, cos) and G has period pi") {
  const std::vector<TrigTerm> terms = {{3, 0.1, -0.05}, {5, 0.0, 0.2}, {9, 0.07, 0.01}};
  const cw::TrigSeries2 g = cw::integrate_profile(terms);

  const double odeDefect = sup_on_grid(401, [&](double t) {
    const Vec2 d = g.eval(t, 1);
    const double r = profile_eval(terms, t);
    return std::max(std::abs(d.x + r * std::sin(t)), std::abs(d.y - r * std::cos(t)));
  });
  CHECK(odeDefect < 1e-13);

  // Odd harmonics land on even frequencies only, so the half turn is exact.
  const double periodDefect = sup_on_grid(129, [&](double t) {
    const Vec2 a = g.eval(t);
    const Vec2 b = g.eval(t + kPi);
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
  });
  CHECK(periodDefect < 1e-13);

  // Zero mean: the constant coefficients vanish.
  CHECK(g.x.constant() == 0.0);
  CHECK(g.y.constant() == 0.0);
}

TEST_CASE("integrate_profile rejects even and too-small harmonics") {
  CHECK_THROWS_AS(cw::integrate_profile({{2, 0.1, 0.0}}), cw::HarmonicViolation);
  CHECK_THROWS_AS(cw::integrate_profile({{1, 0.1, 0.0}}), cw::HarmonicViolation);
  CHECK_THROWS_AS(cw::integrate_profile({{3, 0.1, 0.0}, {4, 0.01, 0.0}}),
                  cw::HarmonicViolation);
}

TEST_CASE("profile_from_midpoint inverts integrate_profile") {
  const std::vector<TrigTerm> terms = {{3, 1.0 / 3, 0.2}, {7, -0.04, 0.015}};
  const std::vector<TrigTerm> back = cw::profile_from_midpoint(cw::integrate_profile(terms));
  REQUIRE(back.size() == terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(back[i].m == terms[i].m);
    CHECK(std::abs(back[i].a - terms[i].a) < 1e-14);
    CHECK(std::abs(back[i].b - terms[i].b) < 1e-14);
  }
}

TEST_CASE("make_constant_diameter: every chord gamma(t) to gamma(t+pi) has length D") {
  const auto curve = cw::make_constant_diameter(1.0, {{3, 1.0 / 3, 0.2}});
  const double defect = sup_on_grid(512, [&](double t) {
    return cw::distance(curve->eval(t), curve->eval(t + kPi)) - 1.0;
  });
  CHECK(defect < 1e-14);
  CHECK(curve->diameter() == 1.0);
  CHECK(curve->scale() == 1.0);
}

TEST_CASE("make_constant_diameter: tangent is (r + D/2) * (-sin, cos)") {
  const std::vector<TrigTerm> terms = {{3, 0.1, 0.0}, {7, 0.0, 1.0 / 2.501}};
  const auto curve = cw::make_constant_diameter(1.0, terms);
  const double defect = sup_on_grid(512, [&](double t) {
    const Vec2 d = curve->eval(t, 1);
    const double speed = curve->profile_value(t) + 0.5;
    return std::max(std::abs(d.x + speed * std::sin(t)), std::abs(d.y - speed * std::cos(t)));
  });
  CHECK(defect < 1e-13);
}

TEST_CASE("TrigCurve derivatives agree with central differences") {
  const auto curve = cw::make_constant_diameter(1.0, {{5, 1.0 / 2.01, 0.0}});
  const double h = 1e-5;
  for (double t : {0.3, 1.7, 4.0}) {
    const Vec2 d1 = curve->eval(t, 1);
    const Vec2 fd1 = (curve->eval(t + h) - curve->eval(t - h)) / (2 * h);
    CHECK(std::abs(d1.x - fd1.x) < 1e-8);
    CHECK(std::abs(d1.y - fd1.y) < 1e-8);
    const Vec2 d2 = curve->eval(t, 2);
    const Vec2 fd2 = (curve->eval(t + h) - 2 * curve->eval(t) + curve->eval(t - h)) / (h * h);
    CHECK(std::abs(d2.x - fd2.x) < 1e-5);
    CHECK(std::abs(d2.y - fd2.y) < 1e-5);
  }
}

TEST_CASE("make_constant_diameter rejects profiles with |r| reaching D/2") {
  CHECK_THROWS_AS(cw::make_constant_diameter(1.0, {{3, 0.6, 0.0}}), cw::AmplitudeViolation);
  CHECK_THROWS_AS(cw::make_constant_diameter(1.0, {{3, 0.5, 0.0}}), cw::AmplitudeViolation);
  try {
    cw::make_constant_diameter(1.0, {{3, 0.0, 0.7}});
    FAIL("expected AmplitudeViolation");
  } catch (const cw::AmplitudeViolation& e) {
    CHECK(std::abs(e.value - 0.7) < 1e-9);  // peak of |0.7 cos(3t)|
  }
  // Just inside the bound is fine.
  CHECK_NOTHROW(cw::make_constant_diameter(1.0, {{3, 0.499, 0.0}}));
}

TEST_CASE("make_circle is the zero-profile curve") {
  const auto circle = cw::make_circle(2.0, {0.5, -1.0});
  const double defect = sup_on_grid(64, [&](double t) {
    return cw::distance(circle->eval(t), {0.5, -1.0}) - 1.0;
  });
  CHECK(defect < 1e-15);
  CHECK(circle->scale() == 2.0);
}

TEST_CASE("make_ellipse traces (a cos, b sin)") {
  const auto e = cw::make_ellipse(1.0, 0.6);
  for (double t : {0.0, 0.9, 2.5, 5.1}) {
    const Vec2 p = e->eval(t);
    CHECK(std::abs(p.x - std::cos(t)) < 1e-15);
    CHECK(std::abs(p.y - 0.6 * std::sin(t)) < 1e-15);
  }
}

TEST_CASE("make_rotor: zero displacement gives the circumscribed circle") {
  const auto rotor = cw::make_rotor(5, 1.0, {}, {});
  const double R = 1.0 / (2.0 * std::sin(kPi / 5));
  CHECK(rotor->order() == 5);
  CHECK(rotor->edge() == 1.0);
  CHECK(std::abs(rotor->circumradius() - R) < 1e-15);
  const double radDefect = sup_on_grid(64, [&](double t) {
    return rotor->eval(t).norm() - R;
  });
  CHECK(radDefect < 1e-14);
  // Stepping by the polygon's central angle walks along edges of length D.
  const double edgeDefect = sup_on_grid(64, [&](double t) {
    return cw::distance(rotor->eval(t), rotor->eval(t + kTwoPi / 5)) - 1.0;
  });
  CHECK(edgeDefect < 1e-14);
}

TEST_CASE("make_rotor: displaced rotor still carries exact inscribed edges") {
  // gamma(t) = G(t) + R(cos, sin) with G of period 2pi/n: the n parameters
  // t + 2pi k/n share one G value, so consecutive vertices stay D apart.
  const double R = 1.0 / (2.0 * std::sin(kPi / 4));
  const auto rotor = cw::make_rotor(4, 1.0, {{4, 0.03 * R, 0.0}}, {{4, 0.0, 0.03 * R}});
  const double edgeDefect = sup_on_grid(256, [&](double t) {
    return cw::distance(rotor->eval(t), rotor->eval(t + kTwoPi / 4)) - 1.0;
  });
  CHECK(edgeDefect < 1e-14);
  const cw::TrigSeries2& g = rotor->displacement_series();
  const double decompDefect = sup_on_grid(64, [&](double t) {
    const Vec2 expect = g.eval(t) + Vec2{R * std::cos(t), R * std::sin(t)};
    return cw::distance(rotor->eval(t), expect);
  });
  CHECK(decompDefect < 1e-14);
}

TEST_CASE("make_rotor validation errors") {
  CHECK_THROWS_AS(cw::make_rotor(2, 1.0, {}, {}), cw::BadOrder);
  CHECK_THROWS_AS(cw::make_rotor(4, 1.0, {{5, 0.01, 0.0}}, {}), cw::FrequencyViolation);
  CHECK_THROWS_AS(cw::make_rotor(4, 1.0, {{0, 0.01, 0.0}}, {}), cw::FrequencyViolation);
  CHECK_THROWS_AS(cw::make_rotor(4, 1.0, {{-4, 0.01, 0.0}}, {}), cw::FrequencyViolation);
  try {
    cw::make_rotor(3, 1.0, {{3, 0.4, 0.0}}, {});
    FAIL("expected GuardViolation");
  } catch (const cw::GuardViolation& e) {
    CHECK(e.measured > e.bound);
    CHECK(std::abs(e.bound - 0.5) < 1e-12);  // R sin(pi/n) = D/2
  }
}

TEST_CASE("TrigSeries2 rigid motions are exact at the coefficient level") {
  cw::TrigSeries2 s = cw::integrate_profile({{3, 0.25, -0.1}});
  s.x.add(1, 0.0, 0.5);
  s.y.add(1, 0.5, 0.0);

  const double angle = 0.7;
  const Vec2 shift{0.3, -0.2};
  const cw::TrigSeries2 moved = s.rotated(angle).translated(shift);
  const double defect = sup_on_grid(128, [&](double t) {
    const Vec2 expect = s.eval(t).rotated(angle) + shift;
    return cw::distance(moved.eval(t), expect);
  });
  CHECK(defect < 1e-15);
}

TEST_CASE("TrigSeries derivative object matches order argument") {
  cw::TrigSeries s;
  s.add(0, 0.0, 1.25);
  s.add(2, 0.5, -0.125);
  s.add(6, 0.0, 0.03125);
  const cw::TrigSeries d = s.derivative();
  for (double t : {0.0, 0.4, 1.9, 3.3, 6.0}) {
    CHECK(std::abs(d.eval(t) - s.eval(t, 1)) < 1e-15);
    CHECK(std::abs(d.eval(t, 1) - s.eval(t, 2)) < 1e-15);
  }
  CHECK(d.constant() == 0.0);
}
