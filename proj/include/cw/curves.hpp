#pragma once

#include <memory>
#include <vector>

#include "cw/curve.hpp"

namespace cw {

// One odd harmonic of a support profile: a*sin(m*theta) + b*cos(m*theta),
// m odd and >= 3. Even harmonics (and m = 1, which only translates the
// curve) would break the half-turn antisymmetry r(theta+pi) = -r(theta)
// that the construction rests on.
struct TrigTerm {
  int m = 3;
  double a = 0.0;
  double b = 0.0;
};

// Antiderivative step of the construction: the unique midpoint curve G with
// G'(theta) = r(theta) * (-sin(theta), cos(theta)) and zero mean, for the
// profile r given by the terms. Each odd harmonic m contributes only the even
// frequencies m-1 and m+1 to G, so G(theta+pi) = G(theta) holds exactly at
// the coefficient level. Throws HarmonicViolation on even or < 3 harmonics.
TrigSeries2 integrate_profile(const std::vector<TrigTerm>& terms);

// Inverse of integrate_profile at the coefficient level: recovers the
// profile r(theta) = <G'(theta), (-sin(theta), cos(theta))> as a harmonic
// list, sorted by harmonic. Coefficients below 1e-13 of the peak are
// cancellation residue and get dropped.
std::vector<TrigTerm> profile_from_midpoint(const TrigSeries2& g);

// Curve of constant diameter D built from a support profile:
//   gamma(theta) = G(theta) + (D/2) * (cos(theta), sin(theta)).
// Every point has gamma(theta + pi) at distance exactly D, all other points
// strictly closer.
class ConstantDiameterCurve final : public TrigCurve {
 public:
  ConstantDiameterCurve(double diameter, std::vector<TrigTerm> profile,
                        TrigSeries2 gSeries, TrigSeries2 fullSeries);

  double diameter() const { return diameter_; }
  const std::vector<TrigTerm>& profile() const { return profile_; }
  const TrigSeries2& midpoint_series() const { return gSeries_; }

  // The support profile r and its derivatives.
  double profile_value(double theta, int order = 0) const;

  std::optional<double> exact_curvature(double u) const override;

 private:
  double diameter_;
  std::vector<TrigTerm> profile_;
  TrigSeries2 gSeries_;
};

// Validates the profile (HarmonicViolation), checks sup|r| < D/2 with a
// dense scan plus golden-section refinement (AmplitudeViolation) and
// assembles the curve.
std::unique_ptr<ConstantDiameterCurve> make_constant_diameter(
    double diameter, const std::vector<TrigTerm>& terms);

// Rotor curve gamma(theta) = G(theta) + R * (cos(theta), sin(theta)) with
// R = D / (2*sin(pi/n)): at every point the curve carries one inscribed
// regular n-gon with edge length D, rotating with theta.
class RotorCurve final : public TrigCurve {
 public:
  RotorCurve(int n, double edge, double circumradius, TrigSeries2 gSeries,
             TrigSeries2 fullSeries);

  int order() const { return n_; }
  double edge() const { return edge_; }
  double circumradius() const { return circumradius_; }
  const TrigSeries2& displacement_series() const { return gSeries_; }

 private:
  int n_;
  double edge_;
  double circumradius_;
  TrigSeries2 gSeries_;
};

struct RotorSpec {
  int n = 3;
  double edge = 1.0;                  // inscribed polygon edge length D
  std::vector<SeriesTerm> gx, gy;     // displacement series, frequencies k*n
};

// Validates the spec: n >= 3 (BadOrder), displacement frequencies positive
// multiples of n (FrequencyViolation), and the smallness guard
//   sum|coef| + sum freq*|coef| <= R * sin(pi/n)  (= D/2)
// (GuardViolation). The left side bounds sup|G| + sup|G'|, the margin the
// inscribed-polygon argument needs; the verifier remains the final authority.
std::unique_ptr<RotorCurve> make_rotor(const RotorSpec& spec);
std::unique_ptr<RotorCurve> make_rotor(int n, double edge,
                                       const std::vector<SeriesTerm>& gx,
                                       const std::vector<SeriesTerm>& gy);

}  // namespace cw
