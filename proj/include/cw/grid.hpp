#pragma once

#include <cstddef>
#include <vector>

#include "cw/curve.hpp"

namespace cw {

// Uniform parameter grid of curve positions, laid out for the scan kernels.
struct CurveGrid {
  std::size_t size = 0;
  double u0 = 0.0;
  double step = 0.0;  // 2*pi/size
  std::vector<double> xs, ys;

  static CurveGrid build(const Curve& curve, std::size_t n, double u0 = 0.0) {
    CurveGrid g;
    g.size = n;
    g.u0 = u0;
    g.step = kTwoPi / static_cast<double>(n);
    g.xs.resize(n);
    g.ys.resize(n);
    curve.sample_grid(n, u0, g.xs.data(), g.ys.data());
    return g;
  }

  Vec2 point(std::size_t i) const { return {xs[i], ys[i]}; }
  double param(std::size_t i) const { return u0 + step * static_cast<double>(i); }
};

}  // namespace cw
