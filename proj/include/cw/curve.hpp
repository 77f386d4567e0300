#pragma once

#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <vector>

#include "cw/trig_series.hpp"
#include "cw/vec2.hpp"

namespace cw {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Wraps u into [0, 2*pi).
double wrap_angle(double u);

// Extended-precision point, produced by Curve::eval_ext.
struct EvalExt {
  long double x = 0.0L;
  long double y = 0.0L;
};

// Closed plane curve parametrized on [0, 2*pi). For trigonometric curves the
// parameter is the angle of the defining series; arc chains map arc-length
// fraction t onto u = 2*pi*t. Derivatives are taken with respect to u.
// Evaluation is pure and safe to call concurrently.
class Curve {
 public:
  virtual ~Curve() = default;

  // order 0 = position, 1 = first, 2 = second derivative. u is periodic.
  virtual Vec2 eval(double u, int order = 0) const = 0;

  // eval in extended precision where the representation supports it; the
  // default degrades to double evaluation. The generic curvature formula
  // divides the cross product by speed^3, amplifying eval rounding by about
  // |gamma''|/|gamma'|^3, which double cannot absorb near low-speed points.
  virtual EvalExt eval_ext(double u, int order = 0) const {
    const Vec2 v = eval(u, order);
    return {v.x, v.y};
  }

  // Characteristic length used to scale tolerances (the diameter for the
  // constructions in this library).
  virtual double scale() const = 0;

  // Parameters of non-smooth junctions, ascending in [0, 2*pi). Empty for
  // smooth curves.
  virtual std::vector<double> breakpoints() const { return {}; }

  // Positions at u0 + j*2*pi/n for j in [0, n), written to xs/ys.
  virtual void sample_grid(std::size_t n, double u0, double* xs, double* ys) const;

  // Closed forms where the representation provides them; nullopt otherwise.
  virtual std::optional<double> exact_curvature(double u) const { return std::nullopt; }
  virtual std::optional<double> exact_perimeter() const { return std::nullopt; }

  // Normalized-parameter facade, t in [0, 1). Derivatives remain with
  // respect to u.
  Vec2 eval_normalized(double t, int order = 0) const { return eval(t * kTwoPi, order); }
};

// Curve backed by a pair of trigonometric polynomials. Grid sampling runs
// through the SIMD evaluation kernel.
class TrigCurve : public Curve {
 public:
  TrigCurve(TrigSeries2 series, double scale);

  Vec2 eval(double u, int order = 0) const override;
  EvalExt eval_ext(double u, int order = 0) const override;
  double scale() const override { return scale_; }
  void sample_grid(std::size_t n, double u0, double* xs, double* ys) const override;

  const TrigSeries2& series() const { return series_; }

 private:
  TrigSeries2 series_;
  kernels::PackedSeries packed_;
  double scale_;
};

// Circle of the given diameter; the classical constant-diameter curve.
std::unique_ptr<TrigCurve> make_circle(double diameter, Vec2 center = {0.0, 0.0});

// Axis-aligned origin-centered ellipse with semi-axes a, b. Serves as the
// negative control: not of constant width unless a == b.
std::unique_ptr<TrigCurve> make_ellipse(double a, double b);

}  // namespace cw
