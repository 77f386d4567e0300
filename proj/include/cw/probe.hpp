#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cw/curve.hpp"
#include "cw/verify.hpp"

namespace cw {

// Grid resolution of the penalty functional. Deliberately coarser than the
// verify defaults: the search needs thousands of evaluations, and promising
// candidates are re-checked at full resolution afterwards.
struct PenaltyOptions {
  std::size_t bases = 128;
  std::size_t offsets = 512;
  std::size_t membershipSamples = 2048;
  double uniqTol = -1.0;       // <= 0 resolves to 1e-6 * D
  double epsilonMargin = 0.1;  // excluded zone around offset 0 (mod 2*pi)
};

// Mean over a base grid of the squared constant-diameter defects
// (max-chord error plus uniqueness violation) plus the mean inscribed-n-gon
// defect E_n, where E_n is the smallest total squared vertex-to-curve
// residual over all candidate n-gons hung off chords of length Dside,
// capped at Dside^2 (the cap value is also used when no candidate exists).
// Zero (to grid resolution) exactly when the curve has both properties.
double penalty(const Curve& curve, double D, int n, double Dside,
               const PenaltyOptions& opts = {});

// A finite-dimensional coefficient family of candidate curves around the
// circle. Coefficient vectors are constrained to the sphere of radius
// delta (default 0.05 * D), which excludes the circle from the search set
// by construction.
class ProbeFamily {
 public:
  enum class Kind { ConstantDiameterProfile, RotorDisplacement };

  // Profiles r = sum_m a_m sin(m t) + b_m cos(m t) over the given odd
  // harmonics (m >= 3); coefficients are [a, b] per harmonic in order.
  static ProbeFamily constant_diameter_profile(double diameter,
                                               std::vector<int> harmonics);
  // Rotor displacement series over the given frequencies (positive
  // multiples of the rotor order); coefficients are [gx.a, gx.b, gy.a,
  // gy.b] per frequency in order. The rotor has circumdiameter `diameter`
  // and edge diameter * sin(pi / order).
  static ProbeFamily rotor_displacement(int order, double diameter,
                                        std::vector<int> frequencies);

  Kind kind() const { return kind_; }
  double diameter() const { return diameter_; }
  int order() const { return order_; }
  const std::vector<int>& frequencies() const { return freqs_; }
  std::size_t dims() const;
  double delta() const { return delta_; }
  void set_delta(double d);

  // Realizes the curve at a coefficient vector of size dims(). Throws the
  // construction errors of the underlying family (AmplitudeViolation,
  // GuardViolation) at inadmissible points.
  std::unique_ptr<Curve> realize(const std::vector<double>& coeffs) const;

 private:
  ProbeFamily() = default;

  Kind kind_ = Kind::ConstantDiameterProfile;
  double diameter_ = 1.0;
  int order_ = 0;
  std::vector<int> freqs_;
  double delta_ = 0.0;
};

struct TracePoint {
  std::size_t iteration = 0;
  double penalty = 0.0;
};

struct ProbeResult {
  std::vector<double> bestCoefficients;  // on the sphere, size = family dims
  double bestPenalty = 0.0;
  std::size_t evaluations = 0;  // penalty evaluations across all restarts
  // Best penalty seen so far, one entry per simplex iteration in restart
  // order; non-increasing, and bestPenalty equals its last entry.
  std::vector<TracePoint> trace;
};

// Minimizes penalty(realize(c), D, n, Dside) over the coefficient sphere by
// Nelder-Mead simplex search with `restarts` independent random restarts.
// Deterministic for a fixed seed. Never claims nonexistence: the result is
// a record of the lowest value found within the budget.
ProbeResult counterexample_search(const ProbeFamily& family, int n,
                                  double Dside, std::size_t iterations,
                                  std::size_t restarts, std::uint64_t seed,
                                  const PenaltyOptions& opts = {});

// Joint check of C(D), C_2n(D * sin(pi/(2n))), and the pi/n-periodicity of
// the recovered midpoint curve. All three defects vanish for the circle;
// for any other curve at least one is positive.
struct C2nReport {
  int n = 2;           // half-order: the polygon property has order 2n
  double D = 0.0;
  double side = 0.0;   // D * sin(pi / (2n))
  VerificationReport cd;
  VerificationReport cn;
  bool recovered = false;       // midpoint recovery succeeded
  double gPeriodDefect = 0.0;   // max |G(theta + pi/n) - G(theta)|
  double maxOrthogonality = 0.0;
  bool passed = false;
};

C2nReport probe_c2n(const Curve& curve, double D, int n,
                    const VerificationOptions& opts = {});

}  // namespace cw
