#include "cw/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cw/arc_curve.hpp"
#include "cw/curves.hpp"
#include "cw/errors.hpp"
#include "cw/geometry.hpp"
#include "cw/grid.hpp"
#include "cw/verify.hpp"

namespace cw {

namespace {

// canonical short form; -0 is flushed so output never depends on sign of zero
std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

std::string num17(double v) {
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// SVG y grows downward; mirror so figures keep mathematical orientation
std::string point_pair(Vec2 p) { return num(p.x) + "," + num(-p.y); }

void append_polygon(std::string& out, const std::vector<Vec2>& pts,
                    const std::string& stroke, double width) {
  out += "  <polygon fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
         num(width) + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += point_pair(pts[i]);
  }
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const Curve& curve, const RenderOptions& opts) {
  if (opts.samples < 64) throw Error("render: samples must be >= 64");
  const double scale = curve.scale();
  const double stroke = opts.strokeWidth * scale;
  const double dot = opts.dotRadius * scale;

  const CurveGrid grid = CurveGrid::build(curve, opts.samples);
  double xMin = grid.xs[0], xMax = grid.xs[0];
  double yMin = grid.ys[0], yMax = grid.ys[0];
  for (std::size_t i = 1; i < grid.size; ++i) {
    xMin = std::min(xMin, grid.xs[i]);
    xMax = std::max(xMax, grid.xs[i]);
    yMin = std::min(yMin, grid.ys[i]);
    yMax = std::max(yMax, grid.ys[i]);
  }
  const double margin = 0.05 * std::max(xMax - xMin, yMax - yMin);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += num(xMin - margin) + " " + num(-(yMax + margin)) + " " +
         num(xMax - xMin + 2.0 * margin) + " " + num(yMax - yMin + 2.0 * margin);
  out += "\">\n";

  if (opts.chords > 0) {
    for (int i = 0; i < opts.chords; ++i) {
      const double u = kTwoPi * static_cast<double>(i) /
                       static_cast<double>(opts.chords);
      const Vec2 p = curve.eval(u);
      const Vec2 q = curve.eval(u + kPi);
      out += "  <line stroke=\"#999999\" stroke-width=\"" + num(0.5 * stroke) +
             "\" x1=\"" + num(p.x) + "\" y1=\"" + num(-p.y) + "\" x2=\"" +
             num(q.x) + "\" y2=\"" + num(-q.y) + "\"/>\n";
    }
  }

  std::vector<Vec2> outline(grid.size);
  for (std::size_t i = 0; i < grid.size; ++i) outline[i] = grid.point(i);
  append_polygon(out, outline, "#000000", stroke);

  if (const auto* cd = dynamic_cast<const ConstantDiameterCurve*>(&curve)) {
    std::vector<Vec2> g(opts.samples);
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const double u = kTwoPi * static_cast<double>(i) /
                       static_cast<double>(opts.samples);
      g[i] = cd->midpoint_series().eval(u);
    }
    append_polygon(out, g, "#cc0000", 0.75 * stroke);
  }

  if (opts.ngon >= 2) {
    double side = scale * std::sin(kPi / opts.ngon);
    if (const auto* rotor = dynamic_cast<const RotorCurve*>(&curve)) {
      if (rotor->order() == opts.ngon) side = rotor->edge();
    }
    const std::vector<NGonWitness> wits =
        find_inscribed_ngons(curve, 0.0, opts.ngon, side);
    if (!wits.empty()) {
      append_polygon(out, wits.front().vertices, "#0066cc", 0.75 * stroke);
      for (const Vec2& v : wits.front().vertices) {
        out += "  <circle fill=\"#0066cc\" cx=\"" + num(v.x) + "\" cy=\"" +
               num(-v.y) + "\" r=\"" + num(0.75 * dot) + "\"/>\n";
      }
    }
  }

  if (opts.showCenters) {
    if (const auto* arcs = dynamic_cast<const PiecewiseArcCurve*>(&curve)) {
      std::vector<Vec2> centers;
      for (const ArcSegment& a : arcs->arcs()) {
        bool seen = false;
        for (const Vec2& c : centers) {
          if (distance(c, a.center) < 1e-12 * scale) {
            seen = true;
            break;
          }
        }
        if (!seen) centers.push_back(a.center);
      }
      for (const Vec2& c : centers) {
        out += "  <circle fill=\"#000000\" cx=\"" + num(c.x) + "\" cy=\"" +
               num(-c.y) + "\" r=\"" + num(dot) + "\"/>\n";
      }
    }
  }

  out += "</svg>\n";
  return out;
}

std::string export_csv(const Curve& curve, std::size_t samples) {
  if (samples == 0) throw Error("export: samples must be >= 1");
  std::string out = "theta,x,y,kappa\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = kTwoPi * static_cast<double>(i) /
                     static_cast<double>(samples);
    const Vec2 p = curve.eval(u);
    const double kappa = curvature(curve, u);
    out += num17(u) + "," + num17(p.x) + "," + num17(p.y) + "," + num17(kappa) +
           "\n";
  }
  return out;
}

}  // namespace cw
