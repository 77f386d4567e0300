#pragma once

#include <limits>
#include <string>
#include <vector>

#include "cw/curve.hpp"

namespace cw {

// Grid sizes and tolerances for the property checks. Negative tolerance
// fields resolve to their defaults scaled by the target distance D:
// valueTol 1e-9*D, uniqTol 1e-6*D, membershipTol 1e-7*D.
struct VerificationOptions {
  std::size_t thetaSamples = 512;  // base points
  std::size_t phiSamples = 2048;   // chord offsets per base
  double valueTol = -1.0;
  double uniqTol = -1.0;
  double membershipTol = -1.0;
  // Exclusion zone (radians) around offset 0 when hunting points at a given
  // distance; must stay below pi/4.
  double epsilonMargin = 0.1;
};

enum class DistanceKind { Transversal, Tangential };

struct DistancePoint {
  double phi = 0.0;  // offset from the base parameter, in (0, 2*pi)
  DistanceKind kind = DistanceKind::Transversal;
};

// All offsets phi with |gamma(u0) - gamma(u0 + phi)| = D: sign changes of
// f - D refined by bisection, plus tangential touches (local maxima of f
// within valueTol of D) refined by golden section. Roots within the
// epsilonMargin zone around phi = 0 are excluded; transversal roots within
// two grid steps of an accepted tangential touch are absorbed by it.
std::vector<DistancePoint> find_points_at_distance(
    const Curve& curve, double u0, double D, const VerificationOptions& opts = {});

enum class Orientation { CCW, CW };

// A regular n-gon with edge length D anchored at a curve point: vertex 0 is
// gamma(baseParam) and the polygon is regular by construction, so the
// residuals measure only how far the remaining vertices miss the curve.
struct NGonWitness {
  double baseParam = 0.0;
  Orientation orientation = Orientation::CCW;
  std::vector<Vec2> vertices;
  std::vector<double> residuals;
  double maxResidual = 0.0;
};

// Inscribed regular n-gons with edge D and one vertex at gamma(u0). For each
// candidate second vertex (a point at distance D) the polygon center sits at
// apothem distance (D/2)/tan(pi/n) on either side of the chord midpoint; a
// candidate is accepted when every vertex lies within membershipTol of the
// curve. Duplicate polygons (same vertex set up to cyclic order/reversal,
// vertices matched within 1e-9 of the curve scale) are merged. n = 2 returns
// the diametral two-point witnesses.
std::vector<NGonWitness> find_inscribed_ngons(const Curve& curve, double u0, int n,
                                              double D,
                                              const VerificationOptions& opts = {});

constexpr double kNoSecondMax = std::numeric_limits<double>::infinity();

// Per-base-point outcome of a property check.
struct BaseRecord {
  double baseParam = 0.0;
  bool pass = true;
  // chord-scan fields (check_constant_diameter)
  double maxChord = 0.0;
  double argmaxPhi = 0.0;
  double uniquenessGap = kNoSecondMax;  // D minus the second-best local max
  bool plateau = false;
  bool passValue = true;
  bool passUnique = true;
  double gridMax = 0.0;        // raw grid-stage maximum distance
  std::size_t gridArgmax = 0;  // raw grid-stage argmax offset index
  // n-gon fields (check_cn)
  std::size_t witnessCount = 0;
  double worstResidual = 0.0;
  std::vector<NGonWitness> witnesses;
};

struct VerificationReport {
  std::string property;  // "C(D)" or "C_n(D)"
  bool passed = false;
  double D = 0.0;  // target diameter (C(D)) or edge length (C_n(D))
  int n = 2;
  bool requireUnique = true;
  VerificationOptions options;
  std::vector<BaseRecord> perBase;
  std::size_t worstBase = 0;
  std::size_t failingBases = 0;
  double worstValueDefect = 0.0;
  std::size_t plateauBases = 0;
  double worstResidual = 0.0;  // C_n only
};

// Certifies the constant-diameter property: at every base point the farthest
// curve point lies at distance D (within valueTol), and - when requireUnique
// is set - every other chord-length local maximum stays below D - uniqTol
// and the maximizer is a single point. Three or more refined maxima within
// valueTol of D at offsets separated by more than 1e-3 rad count as a
// diametral plateau and fail uniqueness.
VerificationReport check_constant_diameter(const Curve& curve, double D,
                                           const VerificationOptions& opts = {},
                                           bool requireUnique = true);

// Certifies the inscribed-n-gon property: exactly one witness at every base.
VerificationReport check_cn(const Curve& curve, int n, double D,
                            const VerificationOptions& opts = {});

// Midpoint curve recovered from the normal construction y(u) =
// gamma(u) + D*n(u): G = (gamma + y)/2 resampled on a uniform grid of the
// chord angle theta, with the profile r = <G'(theta), (-sin, cos)> and the
// orthogonality defect <G'(theta), (cos, sin)> from 4th-order central
// differences. Throws NormalMiss when y leaves the curve by more than
// 1e-7*D and NonMonotoneAngle when the chord angle fails to sweep 2*pi
// monotonically.
struct MidpointRecovery {
  std::vector<double> theta;  // uniform grid 2*pi*j/samples
  std::vector<Vec2> g;
  std::vector<double> r;
  std::vector<double> orthogonality;
  double maxNormalResidual = 0.0;
};

MidpointRecovery recover_midpoint_curve(const Curve& curve, double D,
                                        std::size_t samples = 1024);

// Square-center scan behind the "circle is the only such curve" argument:
// at each base with exactly one inscribed square of side D/sqrt(2), the
// square's far corner must be the diametral point y(base) and its center the
// chord midpoint (gamma + y)/2. Bases with witness count != 1 are collected
// separately - their existence is how non-circles escape.
struct SquareCenterRecord {
  double baseParam = 0.0;
  std::size_t witnessCount = 0;
  double diagonalDefect = 0.0;
  double centerDefect = 0.0;
};

struct SquareCenterReport {
  bool passed = false;  // all count==1 bases satisfy both identities
  double side = 0.0;
  std::vector<SquareCenterRecord> perBase;
  std::vector<std::size_t> countAnomalies;
  double worstDiagonalDefect = 0.0;
  double worstCenterDefect = 0.0;
};

SquareCenterReport check_square_center_property(const Curve& curve, double D,
                                                const VerificationOptions& opts = {});

struct Corner {
  double param = 0.0;
  double turningAngle = 0.0;  // tangent jump, radians
};

// Corners of the curve. Arc chains compare one-sided tangents at the
// junctions (jumps above 1e-6 rad count); smooth curves run the
// grid-halving certificate - the largest tangent step must shrink linearly
// with the grid, else its location is reported as a suspected corner.
std::vector<Corner> detect_corners(const Curve& curve);

// The certificate ratio itself: max tangent-angle step at `samples` divided
// by the max step at 2*samples. Near 2 for smooth curves, near 1 at a corner.
double corner_certificate_ratio(const Curve& curve, std::size_t samples = 8192);

}  // namespace cw
