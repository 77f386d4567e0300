#pragma once

#include <vector>

#include "cw/kernels.hpp"
#include "cw/vec2.hpp"

namespace cw {

// One frequency of a trigonometric polynomial: sinCoef*sin(f*u) + cosCoef*cos(f*u).
struct SeriesTerm {
  int freq = 0;
  double sinCoef = 0.0;
  double cosCoef = 0.0;
};

// Real trigonometric polynomial  constant + sum of SeriesTerms  with unique,
// ascending frequencies >= 1.
class TrigSeries {
 public:
  TrigSeries() = default;

  // Accumulates a coefficient pair at the given frequency (0 adds to the
  // constant through the cosine coefficient).
  void add(int freq, double sinCoef, double cosCoef);

  // Value of the series (order 0) or of its order-th derivative at u.
  double eval(double u, int order = 0) const;

  // eval carried out in long double. Curvature needs the derivatives to
  // better than double rounding near low-speed parameters; see
  // Curve::eval_ext.
  long double eval_ext(double u, int order = 0) const;

  TrigSeries derivative() const;

  double constant() const { return constant_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  int maxFreq() const { return terms_.empty() ? 0 : terms_.back().freq; }
  bool isConstant() const;

  // l1 norms used by smallness guards: sum |coef| and sum freq*|coef|.
  double coefL1() const;
  double derivCoefL1() const;

  // Drops terms whose coefficients are both exactly zero.
  void prune();

 private:
  double constant_ = 0.0;
  std::vector<SeriesTerm> terms_;
};

// A plane curve component pair (x(u), y(u)).
struct TrigSeries2 {
  TrigSeries x, y;

  Vec2 eval(double u, int order = 0) const {
    return {x.eval(u, order), y.eval(u, order)};
  }
  int maxFreq() const { return std::max(x.maxFreq(), y.maxFreq()); }
  bool isConstant() const { return x.isConstant() && y.isConstant(); }

  // Exact coefficient-level rigid motions (rotation about the origin, then
  // translation).
  TrigSeries2 rotated(double angle) const;
  TrigSeries2 translated(const Vec2& v) const;
};

// Dense order-0 coefficient table for the SIMD evaluation kernels.
kernels::PackedSeries pack_series(const TrigSeries2& s);

}  // namespace cw
