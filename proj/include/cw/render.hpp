#pragma once

#include <cstddef>
#include <string>

#include "cw/curve.hpp"

namespace cw {

struct RenderOptions {
  std::size_t samples = 720;  // polyline resolution, >= 64
  int chords = 0;             // diametral chords at equally spaced parameters
  int ngon = 0;               // overlay one inscribed n-gon witness (0 = off)
  bool showCenters = false;   // arc centers as black dots
  double strokeWidth = 0.005; // fraction of the curve scale
  double dotRadius = 0.01;    // fraction of the curve scale
};

// Deterministic standalone SVG: viewBox is the sampled bounding box plus a
// 5% margin, the curve a closed polygon, overlays per options. Constant-
// diameter curves also get their midpoint curve G drawn.
std::string render_svg(const Curve& curve, const RenderOptions& opts = {});

// CSV (header theta,x,y,kappa) at equally spaced parameters, 17 significant
// digits so values round-trip bit-exactly.
std::string export_csv(const Curve& curve, std::size_t samples);

}  // namespace cw
