#include "cw/geometry.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cw/errors.hpp"
#include "cw/grid.hpp"
#include "cw/kernels.hpp"
#include "cw/optimize.hpp"

namespace cw {

double curvature(const Curve& curve, double u) {
  if (auto k = curve.exact_curvature(u)) return *k;
  // The division by speed^3 amplifies rounding in the derivatives, so take
  // them through the extended-precision path and stay there to the end.
  const EvalExt d1 = curve.eval_ext(u, 1);
  const EvalExt d2 = curve.eval_ext(u, 2);
  const long double speed2 = d1.x * d1.x + d1.y * d1.y;
  const long double speed = sqrtl(speed2);
  if (speed < 1e-12 * curve.scale()) {
    throw SingularPoint("vanishing first derivative at u=" + std::to_string(u));
  }
  return static_cast<double>(fabsl(d1.x * d2.y - d1.y * d2.x) / (speed2 * speed));
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre polynomial.
struct Gauss16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};

  Gauss16() {
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        // Legendre recurrence for P_n(t) and P'_n(t)
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double step = p1 / dp;
        t -= step;
        if (std::abs(step) < 1e-15) break;
      }
      {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
      }
      const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
      x[static_cast<std::size_t>(i)] = -t;
      w[static_cast<std::size_t>(i)] = weight;
      x[static_cast<std::size_t>(n - 1 - i)] = t;
      w[static_cast<std::size_t>(n - 1 - i)] = weight;
    }
  }
};

const Gauss16& gauss16() {
  static const Gauss16 g;
  return g;
}

double panel_integral(const Curve& curve, double a, double b) {
  const Gauss16& g = gauss16();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    acc += g.w[k] * curve.eval(mid + half * g.x[k], 1).norm();
  }
  return acc * half;
}

}  // namespace

double perimeter_quadrature(const Curve& curve) {
  // Panel boundaries start at the junctions so each panel sees an analytic
  // speed; doubling then only polishes rounding.
  std::vector<double> bounds = curve.breakpoints();
  if (bounds.empty() || bounds.front() > 0.0) bounds.insert(bounds.begin(), 0.0);
  bounds.push_back(kTwoPi);

  const double tol = 1e-13 * curve.scale();
  double prev = 0.0;
  for (int doubling = 0; doubling <= 20; ++doubling) {
    const int pieces = 1 << doubling;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      const double a = bounds[i];
      const double b = bounds[i + 1];
      const double h = (b - a) / pieces;
      for (int j = 0; j < pieces; ++j) {
        total += panel_integral(curve, a + j * h, a + (j + 1) * h);
      }
    }
    if (doubling > 0 && std::abs(total - prev) < tol) return total;
    prev = total;
  }
  throw NonConvergence("perimeter quadrature did not converge to " +
                       std::to_string(tol));
}

double perimeter(const Curve& curve) {
  if (auto p = curve.exact_perimeter()) return *p;
  return perimeter_quadrature(curve);
}

double width(const Curve& curve, Vec2 direction) {
  const Vec2 d = direction.normalized();
  const std::size_t n = 2048;
  const CurveGrid grid = CurveGrid::build(curve, n);
  const kernels::MinMax mm =
      kernels::projection_minmax(grid.xs.data(), grid.ys.data(), n, d.x, d.y);
  auto proj = [&curve, &d](double u) { return curve.eval(u).dot(d); };
  const double uMax = golden_max(
      proj, grid.param(mm.maxIndex) - grid.step, grid.param(mm.maxIndex) + grid.step,
      1e-12);
  const double uMin = golden_min(
      proj, grid.param(mm.minIndex) - grid.step, grid.param(mm.minIndex) + grid.step,
      1e-12);
  const double hi = std::max(proj(uMax), mm.maxValue);
  const double lo = std::min(proj(uMin), mm.minValue);
  return hi - lo;
}

double chord(const Curve& curve, double theta, double phi) {
  return (curve.eval(theta) - curve.eval(theta + phi)).norm();
}

double ChordFunction::operator()(double phi) const {
  return (curve->eval(base) - curve->eval(base + phi)).norm();
}

namespace detail {

// Shared with the verifier: nearest point against a prebuilt grid.
NearestPoint nearest_on_grid(const Curve& curve, const CurveGrid& grid, Vec2 p,
                             std::vector<double>& buf) {
  const std::size_t n = grid.size;
  buf.resize(n);
  kernels::squared_distances(grid.xs.data(), grid.ys.data(), n, p.x, p.y, buf.data());
  auto dist = [&curve, p](double u) { return (curve.eval(u) - p).norm(); };

  auto refine = [&](std::size_t i) {
    const double u = golden_min(dist, grid.param(i) - grid.step,
                                grid.param(i) + grid.step, 1e-12);
    const double dRef = dist(u);
    const double dGrid = std::sqrt(buf[i]);
    return dRef <= dGrid ? NearestPoint{wrap_angle(u), dRef}
                         : NearestPoint{wrap_angle(grid.param(i)), dGrid};
  };

  const kernels::MinMax mm = kernels::minmax_indexed(buf.data(), n);
  NearestPoint best = refine(mm.minIndex);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == mm.minIndex) continue;
    const double prev = buf[(i + n - 1) % n];
    const double next = buf[(i + 1) % n];
    // leftmost point of each basin counts as its representative
    if (!(buf[i] < prev && buf[i] <= next)) continue;
    const NearestPoint cand = refine(i);
    if (cand.dist < best.dist) best = cand;
  }
  return best;
}

}  // namespace detail

NearestPoint nearest_point(const Curve& curve, Vec2 p) {
  const CurveGrid grid = CurveGrid::build(curve, 4096);
  std::vector<double> buf;
  return detail::nearest_on_grid(curve, grid, p, buf);
}

}  // namespace cw
