#pragma once

// Cross-module internals shared by the geometry, verify and probe
// translation units. Not part of the public headers.

#include <vector>

#include "cw/geometry.hpp"
#include "cw/grid.hpp"
#include "cw/verify.hpp"

namespace cw::detail {

NearestPoint nearest_on_grid(const Curve& curve, const CurveGrid& grid, Vec2 p,
                             std::vector<double>& buf);

// One refined local maximum of a chord-length function.
struct RefinedMax {
  double phi = 0.0;    // offset from the base parameter, in (0, 2*pi)
  double value = 0.0;  // chord length at phi
};

// Chord scan of one base point against an offset grid: fills buf with
// squared distances at offsets j*step, finds grid-local maxima, refines each
// by golden section and merges refined maxima closer than 1e-6 rad (keeping
// the higher). gridMax/gridArgmax report the raw grid stage. The base point
// must be grid point baseIdx when sharedGrid is true; otherwise offsets are
// sampled fresh from u0.
struct ChordScanResult {
  std::vector<RefinedMax> maxima;  // ascending phi
  double gridMax = 0.0;            // sqrt of max squared grid distance
  std::size_t gridArgmax = 0;      // offset index of the grid maximum
};

ChordScanResult scan_chords(const Curve& curve, const CurveGrid& grid,
                            std::size_t baseIdx, double u0, bool sharedGrid,
                            std::vector<double>& buf);

// Extracts the offsets where the chord from the scanned base point has
// length D, reusing a completed scan and its squared-distance buffer.
// Transversal crossings are bisected to 1e-13; refined maxima within
// valueTol of D are tangential touches, and any crossing within two grid
// steps of a touch is treated as part of it. Offsets within eps of 0 or
// 2*pi are dropped.
std::vector<DistancePoint> points_from_scan(const Curve& curve,
                                            const CurveGrid& grid,
                                            std::size_t baseIdx,
                                            const ChordScanResult& scan,
                                            const std::vector<double>& buf,
                                            double D, double valueTol,
                                            double eps);

std::vector<DistancePoint> find_points_on_grid(const Curve& curve,
                                               const CurveGrid& grid,
                                               std::size_t baseIdx, double D,
                                               double valueTol, double eps,
                                               std::vector<double>& buf);

}  // namespace cw::detail
