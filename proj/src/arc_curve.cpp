#include "cw/arc_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cw/errors.hpp"

namespace cw {

namespace {

// Wraps an angle difference into (-pi, pi].
double wrap_to_pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  if (w > kPi) w -= kTwoPi;
  return w;
}

// Positive ccw sweep from angle a to angle b, in (0, 2*pi].
double ccw_sweep(double a, double b) {
  double s = std::fmod(b - a, kTwoPi);
  if (s <= 0.0) s += kTwoPi;
  return s;
}

}  // namespace

PiecewiseArcCurve::PiecewiseArcCurve(std::vector<ArcSegment> arcs, double scaleHint)
    : arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw Error("PiecewiseArcCurve: no arcs");
  double maxRadius = 0.0;
  for (const ArcSegment& a : arcs_) {
    if (!(a.radius > 0.0)) throw Error("PiecewiseArcCurve: arc radius must be positive");
    if (!(a.sweep() > 0.0) || !(a.sweep() < kTwoPi)) {
      throw Error("PiecewiseArcCurve: arc sweep must lie in (0, 2*pi)");
    }
    maxRadius = std::max(maxRadius, a.radius);
  }
  scale_ = scaleHint > 0.0 ? scaleHint : maxRadius;

  const std::size_t n = arcs_.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ArcSegment& cur = arcs_[i];
    const ArcSegment& nxt = arcs_[(i + 1) % n];
    const double gap = distance(cur.end_point(), nxt.start_point());
    if (gap > 1e-12 * scale_) {
      throw Error("PiecewiseArcCurve: junction " + std::to_string(i) +
                  " gap " + std::to_string(gap) + " breaks closure");
    }
    // ccw arcs: tangent angle is (angle on circle) + pi/2
    turning += cur.sweep();
    turning += wrap_to_pi((nxt.startAngle + kPi / 2.0) - (cur.endAngle + kPi / 2.0));
  }
  if (std::abs(turning - kTwoPi) > 1e-9) {
    throw Error("PiecewiseArcCurve: total turning " + std::to_string(turning) +
                " is not 2*pi");
  }

  totalLength_ = 0.0;
  for (const ArcSegment& a : arcs_) totalLength_ += a.length();
  cumFrac_.resize(n + 1);
  cumFrac_[0] = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += arcs_[i].length();
    cumFrac_[i + 1] = acc / totalLength_;
  }
  cumFrac_[n] = 1.0;
  junctionParams_.resize(n);
  for (std::size_t i = 0; i < n; ++i) junctionParams_[i] = kTwoPi * cumFrac_[i];
}

std::size_t PiecewiseArcCurve::arc_index_at(double u) const {
  const double t = wrap_angle(u) / kTwoPi;
  const auto it = std::upper_bound(cumFrac_.begin(), cumFrac_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - cumFrac_.begin());
  i = (i == 0) ? 0 : i - 1;
  return std::min(i, arcs_.size() - 1);
}

Vec2 PiecewiseArcCurve::eval(double u, int order) const {
  const double t = wrap_angle(u) / kTwoPi;
  const std::size_t i = arc_index_at(u);
  const ArcSegment& arc = arcs_[i];
  const double span = cumFrac_[i + 1] - cumFrac_[i];
  const double lam = (t - cumFrac_[i]) / span;
  const double ang = arc.startAngle + lam * arc.sweep();
  // d(ang)/du is the constant totalLength/(2*pi*radius)
  const double rate = totalLength_ / (kTwoPi * arc.radius);
  const double c = std::cos(ang);
  const double s = std::sin(ang);
  switch (order) {
    case 0:
      return {arc.center.x + arc.radius * c, arc.center.y + arc.radius * s};
    case 1:
      return {-arc.radius * rate * s, arc.radius * rate * c};
    case 2:
      return {-arc.radius * rate * rate * c, -arc.radius * rate * rate * s};
    default:
      throw Error("PiecewiseArcCurve::eval: order must be 0, 1 or 2");
  }
}

std::vector<double> PiecewiseArcCurve::breakpoints() const { return junctionParams_; }

std::optional<double> PiecewiseArcCurve::exact_curvature(double u) const {
  return 1.0 / arcs_[arc_index_at(u)].radius;
}

namespace {

void check_reuleaux_order(int n) {
  if (n < 3 || n % 2 == 0) {
    throw EvenOrder("Reuleaux order n=" + std::to_string(n) +
                    " must be an odd integer >= 3");
  }
}

// Vertices of the regular n-gon (apex up) whose longest diagonal is `diag`.
std::vector<Vec2> polygon_vertices(int n, double diag) {
  const double R = diag / (2.0 * std::sin(kPi * (n - 1) / (2.0 * n)));
  std::vector<Vec2> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double a = kPi / 2.0 + kTwoPi * j / n;
    v[static_cast<std::size_t>(j)] = {R * std::cos(a), R * std::sin(a)};
  }
  return v;
}

}  // namespace

std::unique_ptr<PiecewiseArcCurve> make_reuleaux(int n, double diameter) {
  check_reuleaux_order(n);
  if (!(diameter > 0.0)) throw Error("make_reuleaux: D must be positive");

  const auto v = polygon_vertices(n, diameter);
  std::vector<ArcSegment> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    // Arc from v[j] to v[j+1], centered at the opposite vertex; both
    // endpoints sit at the longest diagonal, i.e. exactly at radius D.
    const Vec2& a = v[static_cast<std::size_t>(j)];
    const Vec2& b = v[static_cast<std::size_t>((j + 1) % n)];
    const Vec2& c = v[static_cast<std::size_t>((j + (n + 1) / 2) % n)];
    const double start = (a - c).angle();
    ArcSegment arc;
    arc.center = c;
    arc.radius = diameter;
    arc.startAngle = start;
    arc.endAngle = start + ccw_sweep(start, (b - c).angle());
    arcs.push_back(arc);
  }
  return std::make_unique<PiecewiseArcCurve>(std::move(arcs), diameter);
}

std::unique_ptr<PiecewiseArcCurve> make_rounded_reuleaux(int n, double diameter,
                                                         double b) {
  check_reuleaux_order(n);
  if (!(diameter > 0.0)) throw Error("make_rounded_reuleaux: D must be positive");
  if (b < 0.0 || b >= diameter / 2.0) {
    throw BadRadius("corner radius b=" + std::to_string(b) +
                    " must lie in [0, D/2)");
  }
  if (b == 0.0) return make_reuleaux(n, diameter);

  // Inner polygon with longest diagonal s; outer arcs at radius s + b and
  // corner arcs at radius b add up to width (s + b) + b = D in every
  // direction.
  const double s = diameter - 2.0 * b;
  const auto v = polygon_vertices(n, s);
  std::vector<ArcSegment> arcs;
  arcs.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Vec2& vj = v[static_cast<std::size_t>(j)];
    const Vec2& vk = v[static_cast<std::size_t>((j + 1) % n)];
    const Vec2& c = v[static_cast<std::size_t>((j + (n + 1) / 2) % n)];
    const Vec2& cNext = v[static_cast<std::size_t>((j + 1 + (n + 1) / 2) % n)];

    ArcSegment outer;
    outer.center = c;
    outer.radius = s + b;
    outer.startAngle = (vj - c).angle();
    outer.endAngle = outer.startAngle + ccw_sweep(outer.startAngle, (vk - c).angle());
    arcs.push_back(outer);

    // Corner at v[j+1]: from the outgoing radial direction of this outer arc
    // to the incoming radial direction of the next one; tangents match at
    // both junctions because the radial directions agree.
    ArcSegment corner;
    corner.center = vk;
    corner.radius = b;
    corner.startAngle = (vk - c).angle();
    corner.endAngle =
        corner.startAngle + ccw_sweep(corner.startAngle, (vk - cNext).angle());
    arcs.push_back(corner);
  }
  return std::make_unique<PiecewiseArcCurve>(std::move(arcs), diameter);
}

}  // namespace cw
