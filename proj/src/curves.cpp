#include "cw/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cw/errors.hpp"
#include "cw/optimize.hpp"

namespace cw {

namespace {

void validate_profile_terms(const std::vector<TrigTerm>& terms) {
  for (const TrigTerm& t : terms) {
    if (t.m < 3 || t.m % 2 == 0) {
      throw HarmonicViolation("profile harmonic m=" + std::to_string(t.m) +
                              " is not an odd integer >= 3");
    }
  }
}

}  // namespace

TrigSeries2 integrate_profile(const std::vector<TrigTerm>& terms) {
  validate_profile_terms(terms);
  TrigSeries2 g;
  for (const TrigTerm& t : terms) {
    // With m = 2k+1, integrating r(theta)*(-sin, cos) term by term:
    //   a*sin(m t): Gx += a/4 * (-sin(2kt)/k + sin(2(k+1)t)/(k+1))
    //               Gy += a/4 * (-cos(2kt)/k - cos(2(k+1)t)/(k+1))
    //   b*cos(m t): Gx += b/4 * (-cos(2kt)/k + cos(2(k+1)t)/(k+1))
    //               Gy += b/4 * ( sin(2kt)/k + sin(2(k+1)t)/(k+1))
    const double k = static_cast<double>((t.m - 1) / 2);
    const int fLo = t.m - 1;
    const int fHi = t.m + 1;
    if (t.a != 0.0) {
      const double q = t.a / 4.0;
      g.x.add(fLo, -q / k, 0.0);
      g.x.add(fHi, q / (k + 1.0), 0.0);
      g.y.add(fLo, 0.0, -q / k);
      g.y.add(fHi, 0.0, -q / (k + 1.0));
    }
    if (t.b != 0.0) {
      const double q = t.b / 4.0;
      g.x.add(fLo, 0.0, -q / k);
      g.x.add(fHi, 0.0, q / (k + 1.0));
      g.y.add(fLo, q / k, 0.0);
      g.y.add(fHi, q / (k + 1.0), 0.0);
    }
  }
  g.x.prune();
  g.y.prune();
  return g;
}

std::vector<TrigTerm> profile_from_midpoint(const TrigSeries2& g) {
  // r = <G', (-sin, cos)>; products of frequency f with frequency 1 land on
  // f-1 and f+1, so an even-frequency G yields only odd harmonics.
  std::map<int, TrigTerm> acc;
  auto addSin = [&acc](int m, double v) {
    if (m == 0 || v == 0.0) return;
    auto& t = acc[m];
    t.m = m;
    t.a += v;
  };
  auto addCos = [&acc](int m, double v) {
    if (m == 0 || v == 0.0) return;
    auto& t = acc[m];
    t.m = m;
    t.b += v;
  };
  for (const SeriesTerm& t : g.x.terms()) {
    const double f = static_cast<double>(t.freq);
    // -sin * d/dt[s*sin(ft) + c*cos(ft)]
    addSin(t.freq - 1, f * t.sinCoef / 2.0);
    addSin(t.freq + 1, -f * t.sinCoef / 2.0);
    addCos(t.freq - 1, f * t.cosCoef / 2.0);
    addCos(t.freq + 1, -f * t.cosCoef / 2.0);
  }
  for (const SeriesTerm& t : g.y.terms()) {
    const double f = static_cast<double>(t.freq);
    // cos * d/dt[s*sin(ft) + c*cos(ft)]
    addCos(t.freq - 1, f * t.sinCoef / 2.0);
    addCos(t.freq + 1, f * t.sinCoef / 2.0);
    addSin(t.freq - 1, -f * t.cosCoef / 2.0);
    addSin(t.freq + 1, -f * t.cosCoef / 2.0);
  }
  // Adjacent harmonics cancel on the shared frequencies only up to the
  // rounding of the integration constants, so prune relative to the peak
  // instead of testing for exact zeros.
  double peak = 0.0;
  for (const auto& [m, t] : acc) {
    peak = std::max({peak, std::abs(t.a), std::abs(t.b)});
  }
  const double cut = 1e-13 * peak;
  std::vector<TrigTerm> out;
  for (const auto& [m, t] : acc) {
    if (std::abs(t.a) > cut || std::abs(t.b) > cut) out.push_back(t);
  }
  return out;
}

ConstantDiameterCurve::ConstantDiameterCurve(double diameter,
                                             std::vector<TrigTerm> profile,
                                             TrigSeries2 gSeries,
                                             TrigSeries2 fullSeries)
    : TrigCurve(std::move(fullSeries), diameter),
      diameter_(diameter),
      profile_(std::move(profile)),
      gSeries_(std::move(gSeries)) {}

double ConstantDiameterCurve::profile_value(double theta, int order) const {
  double acc = 0.0;
  for (const TrigTerm& t : profile_) {
    const double m = static_cast<double>(t.m);
    const double s = std::sin(m * theta);
    const double c = std::cos(m * theta);
    switch (order) {
      case 0:
        acc += t.a * s + t.b * c;
        break;
      case 1:
        acc += m * (t.a * c - t.b * s);
        break;
      case 2:
        acc += m * m * (-t.a * s - t.b * c);
        break;
      default:
        throw Error("profile_value: order must be 0, 1 or 2");
    }
  }
  return acc;
}

std::optional<double> ConstantDiameterCurve::exact_curvature(double u) const {
  // |gamma'| = r + D/2 > 0, and the curve turns at unit angular rate, so the
  // radius of curvature is r + D/2 pointwise.
  return 1.0 / (profile_value(u) + diameter_ / 2.0);
}

std::unique_ptr<ConstantDiameterCurve> make_constant_diameter(
    double diameter, const std::vector<TrigTerm>& terms) {
  if (!(diameter > 0.0)) throw Error("make_constant_diameter: D must be positive");
  validate_profile_terms(terms);

  // Admissibility: sup |r| < D/2. Dense scan, then golden refinement of the
  // worst bracket; a strict margin keeps the speed r + D/2 bounded away
  // from zero.
  std::vector<TrigTerm> profile = terms;
  auto absR = [&profile](double theta) {
    double v = 0.0;
    for (const TrigTerm& t : profile) {
      v += t.a * std::sin(t.m * theta) + t.b * std::cos(t.m * theta);
    }
    return std::abs(v);
  };
  const std::size_t scan = 4096;
  double bestV = -1.0;
  double bestT = 0.0;
  for (std::size_t i = 0; i < scan; ++i) {
    const double th = kTwoPi * static_cast<double>(i) / static_cast<double>(scan);
    const double v = absR(th);
    if (v > bestV) {
      bestV = v;
      bestT = th;
    }
  }
  const double h = kTwoPi / static_cast<double>(scan);
  const double thStar = golden_max(absR, bestT - h, bestT + h, 1e-12);
  const double vStar = std::max(bestV, absR(thStar));
  if (vStar >= diameter / 2.0 - 1e-9 * diameter) {
    throw AmplitudeViolation(
        "profile amplitude sup|r| = " + std::to_string(vStar) +
            " reaches D/2 = " + std::to_string(diameter / 2.0) +
            " near theta = " + std::to_string(wrap_angle(thStar)),
        wrap_angle(thStar), vStar);
  }

  TrigSeries2 g = integrate_profile(profile);
  TrigSeries2 full = g;
  full.x.add(1, 0.0, diameter / 2.0);
  full.y.add(1, diameter / 2.0, 0.0);
  return std::make_unique<ConstantDiameterCurve>(diameter, std::move(profile),
                                                 std::move(g), std::move(full));
}

RotorCurve::RotorCurve(int n, double edge, double circumradius, TrigSeries2 gSeries,
                       TrigSeries2 fullSeries)
    : TrigCurve(std::move(fullSeries), 2.0 * circumradius),
      n_(n),
      edge_(edge),
      circumradius_(circumradius),
      gSeries_(std::move(gSeries)) {}

std::unique_ptr<RotorCurve> make_rotor(const RotorSpec& spec) {
  if (spec.n < 3) {
    throw BadOrder("rotor order n=" + std::to_string(spec.n) + " must be >= 3");
  }
  if (!(spec.edge > 0.0)) throw Error("make_rotor: edge length must be positive");

  TrigSeries2 g;
  for (const auto* comp : {&spec.gx, &spec.gy}) {
    for (const SeriesTerm& t : *comp) {
      if (t.freq <= 0 || t.freq % spec.n != 0) {
        throw FrequencyViolation(
            "rotor displacement frequency " + std::to_string(t.freq) +
            " is not a positive multiple of n=" + std::to_string(spec.n));
      }
    }
  }
  for (const SeriesTerm& t : spec.gx) g.x.add(t.freq, t.sinCoef, t.cosCoef);
  for (const SeriesTerm& t : spec.gy) g.y.add(t.freq, t.sinCoef, t.cosCoef);
  g.x.prune();
  g.y.prune();

  const double R = spec.edge / (2.0 * std::sin(kPi / spec.n));
  // l1 mass bounds sup|G| + sup|G'|; keeping it below R*sin(pi/n) = D/2
  // leaves the chord-length crossings of the inscribed-polygon argument
  // intact. The verifier remains the final authority on uniqueness.
  const double measured = g.x.coefL1() + g.y.coefL1() + g.x.derivCoefL1() + g.y.derivCoefL1();
  const double bound = R * std::sin(kPi / spec.n);
  if (measured > bound) {
    throw GuardViolation("rotor displacement l1 mass " + std::to_string(measured) +
                             " exceeds the smallness bound " + std::to_string(bound),
                         measured, bound);
  }

  TrigSeries2 full = g;
  full.x.add(1, 0.0, R);
  full.y.add(1, R, 0.0);
  return std::make_unique<RotorCurve>(spec.n, spec.edge, R, std::move(g),
                                      std::move(full));
}

std::unique_ptr<RotorCurve> make_rotor(int n, double edge,
                                       const std::vector<SeriesTerm>& gx,
                                       const std::vector<SeriesTerm>& gy) {
  RotorSpec spec;
  spec.n = n;
  spec.edge = edge;
  spec.gx = gx;
  spec.gy = gy;
  return make_rotor(spec);
}

}  // namespace cw
