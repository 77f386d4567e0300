#pragma once

#include "cw/curve.hpp"

namespace cw {

// Signed-magnitude curvature |g' x g''| / |g'|^3 at parameter u, using the
// representation's closed form when it has one. Throws SingularPoint when
// |g'| < 1e-12 * scale.
double curvature(const Curve& curve, double u);

// Arc length of the closed curve. Arc chains use the exact sum of
// radius*sweep; smooth curves integrate |g'| with composite 16-point
// Gauss-Legendre panels, doubling the panel count until two successive
// estimates agree to 1e-13 * scale (NonConvergence after 20 doublings).
double perimeter(const Curve& curve);

// The quadrature path unconditionally, as a cross-check for arc chains.
double perimeter_quadrature(const Curve& curve);

// Directional width: extent of the projection onto the unit vector
// direction. 2048-point grid scan, extrema refined by golden section to a
// parameter tolerance of 1e-12.
double width(const Curve& curve, Vec2 direction);

// Chord length |gamma(theta) - gamma(theta + phi)|.
double chord(const Curve& curve, double theta, double phi);

// The chord-length function phi -> |gamma(base) - gamma(base + phi)| of one
// base point.
struct ChordFunction {
  const Curve* curve = nullptr;
  double base = 0.0;
  double operator()(double phi) const;
};

struct NearestPoint {
  double param = 0.0;  // parameter u of the closest curve point
  double dist = 0.0;
};

// Distance from p to the curve: global minimum over a 4096-point grid with
// every grid-local basin refined by golden section.
NearestPoint nearest_point(const Curve& curve, Vec2 p);

}  // namespace cw
