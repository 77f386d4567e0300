#include "cw/curve.hpp"

#include <cmath>
#include <stdexcept>

#include "cw/errors.hpp"

namespace cw {

double wrap_angle(double u) {
  double w = std::fmod(u, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

void Curve::sample_grid(std::size_t n, double u0, double* xs, double* ys) const {
  const double step = kTwoPi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2 p = eval(u0 + step * static_cast<double>(j));
    xs[j] = p.x;
    ys[j] = p.y;
  }
}

TrigCurve::TrigCurve(TrigSeries2 series, double scale)
    : series_(std::move(series)), packed_(pack_series(series_)), scale_(scale) {
  if (!(scale_ > 0.0)) throw Error("TrigCurve: scale must be positive");
}

Vec2 TrigCurve::eval(double u, int order) const { return series_.eval(u, order); }

EvalExt TrigCurve::eval_ext(double u, int order) const {
  return {series_.x.eval_ext(u, order), series_.y.eval_ext(u, order)};
}

void TrigCurve::sample_grid(std::size_t n, double u0, double* xs, double* ys) const {
  const double step = kTwoPi / static_cast<double>(n);
  std::vector<double> su(n), cu(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = u0 + step * static_cast<double>(j);
    su[j] = std::sin(u);
    cu[j] = std::cos(u);
  }
  kernels::series_eval(su.data(), cu.data(), n, packed_, xs, ys);
}

std::unique_ptr<TrigCurve> make_circle(double diameter, Vec2 center) {
  if (!(diameter > 0.0)) throw Error("make_circle: diameter must be positive");
  TrigSeries2 s;
  s.x.add(0, 0.0, center.x);
  s.y.add(0, 0.0, center.y);
  s.x.add(1, 0.0, diameter / 2.0);
  s.y.add(1, diameter / 2.0, 0.0);
  return std::make_unique<TrigCurve>(std::move(s), diameter);
}

std::unique_ptr<TrigCurve> make_ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error("make_ellipse: semi-axes must be positive");
  TrigSeries2 s;
  s.x.add(1, 0.0, a);
  s.y.add(1, b, 0.0);
  return std::make_unique<TrigCurve>(std::move(s), 2.0 * std::max(a, b));
}

}  // namespace cw
