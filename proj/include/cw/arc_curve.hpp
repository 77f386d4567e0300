#pragma once

#include <memory>
#include <vector>

#include "cw/curve.hpp"

namespace cw {

// Counterclockwise circular arc from startAngle to endAngle about center,
// 0 < endAngle - startAngle < 2*pi.
struct ArcSegment {
  Vec2 center;
  double radius = 1.0;
  double startAngle = 0.0;
  double endAngle = 0.0;

  double sweep() const { return endAngle - startAngle; }
  double length() const { return radius * sweep(); }
  Vec2 point_at(double angle) const {
    return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
  }
  Vec2 start_point() const { return point_at(startAngle); }
  Vec2 end_point() const { return point_at(endAngle); }
};

// Closed chain of ccw arcs, parametrized by arc-length fraction mapped onto
// [0, 2*pi), i.e. constant speed totalLength/(2*pi). At a junction parameter
// evaluation returns the right-sided limit. The constructor validates each
// arc, endpoint closure (within 1e-12 of the curve scale per junction) and a
// total turning of 2*pi.
class PiecewiseArcCurve final : public Curve {
 public:
  explicit PiecewiseArcCurve(std::vector<ArcSegment> arcs, double scaleHint = 0.0);

  Vec2 eval(double u, int order = 0) const override;
  double scale() const override { return scale_; }
  std::vector<double> breakpoints() const override;
  std::optional<double> exact_curvature(double u) const override;
  std::optional<double> exact_perimeter() const override { return totalLength_; }

  const std::vector<ArcSegment>& arcs() const { return arcs_; }
  // Junction parameters in [0, 2*pi), one per arc start.
  const std::vector<double>& junction_params() const { return junctionParams_; }
  std::size_t arc_index_at(double u) const;
  double total_length() const { return totalLength_; }

 private:
  std::vector<ArcSegment> arcs_;
  std::vector<double> cumFrac_;        // size arcs+1, cumFrac_[0]=0, back()=1
  std::vector<double> junctionParams_;
  double totalLength_ = 0.0;
  double scale_ = 0.0;
};

// Reuleaux polygon of odd order n >= 3 and width D: n vertices of the regular
// n-gon whose longest diagonal is D, each boundary arc centered at the
// opposite vertex with radius D. Throws EvenOrder otherwise.
std::unique_ptr<PiecewiseArcCurve> make_reuleaux(int n, double diameter);

// Reuleaux polygon with corners rounded at radius b in [0, D/2): 2n arcs
// alternating between corner arcs (radius b, centered at the vertices of the
// inner polygon with longest diagonal D - 2b) and outer arcs (radius D - b,
// centered at the opposite inner vertex), meeting tangentially. b = 0
// degenerates to make_reuleaux. Throws EvenOrder / BadRadius.
std::unique_ptr<PiecewiseArcCurve> make_rounded_reuleaux(int n, double diameter,
                                                         double b);

}  // namespace cw
