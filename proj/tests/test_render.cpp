#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cw/arc_curve.hpp"
#include "cw/curves.hpp"
#include "cw/errors.hpp"
#include "cw/render.hpp"

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("render_svg: deterministic, well-formed, responsive to options") {
  const auto curve = cw::make_constant_diameter(1.0, {{3, 1.0 / 3, 0.2}});
  cw::RenderOptions opts;
  opts.samples = 256;
  opts.chords = 8;

  const std::string a = cw::render_svg(*curve, opts);
  const std::string b = cw::render_svg(*curve, opts);
  CHECK(a == b);

  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("viewBox=\"") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(a, "<line") == 8);
  // Constant-diameter curves carry their midpoint-curve overlay.
  CHECK(a.find("#cc0000") != std::string::npos);

  cw::RenderOptions plain;
  plain.samples = 256;
  const std::string noChords = cw::render_svg(*curve, plain);
  CHECK(count_occurrences(noChords, "<line") == 0);
  CHECK(noChords != a);
}

TEST_CASE("render_svg: n-gon overlay and arc centers") {
  const auto circle = cw::make_circle(1.0);
  cw::RenderOptions opts;
  opts.samples = 128;
  opts.ngon = 4;
  const std::string svg = cw::render_svg(*circle, opts);
  CHECK(svg.find("#0066cc") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle") == 4);  // one dot per square vertex

  const auto reuleaux = cw::make_reuleaux(3, 1.0);
  cw::RenderOptions centers;
  centers.samples = 128;
  centers.showCenters = true;
  const std::string rsvg = cw::render_svg(*reuleaux, centers);
  CHECK(count_occurrences(rsvg, "<circle") == 3);  // deduplicated arc centers
}

TEST_CASE("render_svg rejects too-coarse sampling") {
  const auto circle = cw::make_circle(1.0);
  cw::RenderOptions opts;
  opts.samples = 32;
  CHECK_THROWS_AS(cw::render_svg(*circle, opts), cw::Error);
}

TEST_CASE("export_csv: header, row count, and exact values for the circle") {
  const auto circle = cw::make_circle(2.0);  // radius 1: kappa = 1 everywhere
  const std::string csv = cw::export_csv(*circle, 4);
  CHECK(csv.rfind("theta,x,y,kappa\n", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 5);  // header + 4 rows

  // Row 0 is theta=0 -> (1, 0), curvature 1.
  CHECK(csv.find("\n0,1,0,1\n") != std::string::npos);
}

TEST_CASE("export_csv: values round-trip through 17 significant digits") {
  const auto curve = cw::make_constant_diameter(1.0, {{5, 1.0 / 2.01, 0.0}});
  const std::size_t samples = 16;
  const std::string csv = cw::export_csv(*curve, samples);

  std::size_t pos = csv.find('\n') + 1;  // skip header
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t end = csv.find('\n', pos);
    REQUIRE(end != std::string::npos);
    const std::string row = csv.substr(pos, end - pos);
    double theta = 0.0, x = 0.0, y = 0.0, kappa = 0.0;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf", &theta, &x, &y, &kappa) == 4);

    const cw::Vec2 p = curve->eval(theta);
    CHECK(p.x == x);  // 17 significant digits reproduce the doubles exactly
    CHECK(p.y == y);
    const double expected = 1.0 / (curve->profile_value(theta) + 0.5);
    CHECK(std::abs(kappa - expected) < 1e-12);
    pos = end + 1;
  }
}
