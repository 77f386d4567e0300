#include "cw/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cw/curves.hpp"
#include "cw/errors.hpp"
#include "cw/grid.hpp"
#include "cw/parallel.hpp"
#include "internal.hpp"

namespace cw {

namespace {

constexpr double kInadmissible = 1e100;

double sq(double x) { return x * x; }

}  // namespace

double penalty(const Curve& curve, double D, int n, double Dside,
               const PenaltyOptions& opts) {
  if (n < 2) throw Error("penalty: n must be >= 2");
  if (D <= 0.0 || Dside <= 0.0) throw Error("penalty: lengths must be positive");
  if (opts.bases < 4 || opts.offsets < 32 || opts.membershipSamples < 64) {
    throw Error("penalty: grids too small");
  }
  const std::size_t T = opts.bases;
  const std::size_t M = opts.offsets;
  const bool shared = (M % T) == 0;
  const double uniqTol = opts.uniqTol > 0.0 ? opts.uniqTol : 1e-6 * D;
  const double sideTol = 1e-9 * Dside;
  const double cap = Dside * Dside;
  const double h = n >= 3 ? 0.5 * Dside / std::tan(kPi / n) : 0.0;

  const CurveGrid sharedGrid = shared ? CurveGrid::build(curve, M) : CurveGrid();
  const CurveGrid membership = CurveGrid::build(curve, opts.membershipSamples);

  std::vector<double> cdTerm(T), enTerm(T);
  parallel_for(T, [&](std::size_t b0, std::size_t b1) {
    std::vector<double> buf, nearBuf;
    for (std::size_t b = b0; b < b1; ++b) {
      const double baseU = kTwoPi * static_cast<double>(b) / static_cast<double>(T);
      const CurveGrid local =
          shared ? CurveGrid() : CurveGrid::build(curve, M, baseU);
      const CurveGrid& grid = shared ? sharedGrid : local;
      const std::size_t idx = shared ? b * (M / T) : 0;

      const detail::ChordScanResult scan =
          detail::scan_chords(curve, grid, idx, baseU, shared, buf);
      double bestMax = scan.maxima.front().value;
      double second = -1.0;
      for (std::size_t i = 1; i < scan.maxima.size(); ++i) {
        const double v = scan.maxima[i].value;
        if (v > bestMax) {
          second = bestMax;
          bestMax = v;
        } else {
          second = std::max(second, v);
        }
      }
      double cd = sq(bestMax - D);
      if (second >= 0.0) cd += sq(std::max(0.0, second - (D - uniqTol)));
      cdTerm[b] = cd;

      const std::vector<DistancePoint> sols = detail::points_from_scan(
          curve, grid, idx, scan, buf, Dside, sideTol, opts.epsilonMargin);
      const Vec2 x = curve.eval(grid.param(idx));
      double best = cap;
      for (const DistancePoint& s : sols) {
        const Vec2 y = curve.eval(grid.param(idx) + s.phi);
        if (n == 2) {
          const Vec2 v1 = x + Dside * (y - x).normalized();
          const double d =
              detail::nearest_on_grid(curve, membership, v1, nearBuf).dist;
          best = std::min(best, d * d);
          continue;
        }
        const Vec2 mid = 0.5 * (x + y);
        const Vec2 nHat = (y - x).normalized().perp();
        for (const double sigma : {1.0, -1.0}) {
          const Vec2 c = mid + sigma * h * nHat;
          double total = 0.0;
          for (int k = 1; k < n && total < best; ++k) {
            const Vec2 v = c + (x - c).rotated(sigma * kTwoPi * k / n);
            const double d =
                detail::nearest_on_grid(curve, membership, v, nearBuf).dist;
            total += d * d;
          }
          if (total < best) best = total;
        }
      }
      enTerm[b] = best;
    }
  });

  double accCd = 0.0, accEn = 0.0;
  for (std::size_t b = 0; b < T; ++b) accCd += cdTerm[b];
  for (std::size_t b = 0; b < T; ++b) accEn += enTerm[b];
  const double tn = static_cast<double>(T);
  return accCd / tn + accEn / tn;
}

ProbeFamily ProbeFamily::constant_diameter_profile(double diameter,
                                                   std::vector<int> harmonics) {
  if (diameter <= 0.0) throw Error("ProbeFamily: diameter must be positive");
  if (harmonics.empty()) throw Error("ProbeFamily: at least one coefficient");
  std::sort(harmonics.begin(), harmonics.end());
  for (std::size_t i = 0; i < harmonics.size(); ++i) {
    const int m = harmonics[i];
    if (m < 3 || m % 2 == 0) {
      throw HarmonicViolation("ProbeFamily: harmonics must be odd and >= 3, got " +
                              std::to_string(m));
    }
    if (i > 0 && harmonics[i - 1] == m) {
      throw HarmonicViolation("ProbeFamily: duplicate harmonic " +
                              std::to_string(m));
    }
  }
  ProbeFamily f;
  f.kind_ = Kind::ConstantDiameterProfile;
  f.diameter_ = diameter;
  f.freqs_ = std::move(harmonics);
  f.delta_ = 0.05 * diameter;
  return f;
}

ProbeFamily ProbeFamily::rotor_displacement(int order, double diameter,
                                            std::vector<int> frequencies) {
  if (order < 3) throw BadOrder("ProbeFamily: rotor order must be >= 3");
  if (diameter <= 0.0) throw Error("ProbeFamily: diameter must be positive");
  if (frequencies.empty()) throw Error("ProbeFamily: at least one coefficient");
  std::sort(frequencies.begin(), frequencies.end());
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    const int f = frequencies[i];
    if (f <= 0 || f % order != 0) {
      throw FrequencyViolation(
          "ProbeFamily: frequencies must be positive multiples of " +
          std::to_string(order) + ", got " + std::to_string(f));
    }
    if (i > 0 && frequencies[i - 1] == f) {
      throw FrequencyViolation("ProbeFamily: duplicate frequency " +
                               std::to_string(f));
    }
  }
  ProbeFamily fam;
  fam.kind_ = Kind::RotorDisplacement;
  fam.diameter_ = diameter;
  fam.order_ = order;
  fam.freqs_ = std::move(frequencies);
  fam.delta_ = 0.05 * diameter;
  return fam;
}

std::size_t ProbeFamily::dims() const {
  return freqs_.size() * (kind_ == Kind::ConstantDiameterProfile ? 2 : 4);
}

void ProbeFamily::set_delta(double d) {
  if (d <= 0.0) throw Error("ProbeFamily: delta must be positive");
  delta_ = d;
}

std::unique_ptr<Curve> ProbeFamily::realize(
    const std::vector<double>& coeffs) const {
  if (coeffs.size() != dims()) {
    throw Error("ProbeFamily: expected " + std::to_string(dims()) +
                " coefficients, got " + std::to_string(coeffs.size()));
  }
  if (kind_ == Kind::ConstantDiameterProfile) {
    std::vector<TrigTerm> terms;
    terms.reserve(freqs_.size());
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      terms.push_back({freqs_[i], coeffs[2 * i], coeffs[2 * i + 1]});
    }
    return make_constant_diameter(diameter_, terms);
  }
  const double edge = diameter_ * std::sin(kPi / order_);
  std::vector<SeriesTerm> gx, gy;
  gx.reserve(freqs_.size());
  gy.reserve(freqs_.size());
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    gx.push_back({freqs_[i], coeffs[4 * i], coeffs[4 * i + 1]});
    gy.push_back({freqs_[i], coeffs[4 * i + 2], coeffs[4 * i + 3]});
  }
  return make_rotor(order_, edge, gx, gy);
}

namespace {

// Deterministic, platform-independent stream for the restart draws.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    double u1 = uniform();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
};

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

struct RestartOutcome {
  std::vector<double> bestCoeffs;
  double best = std::numeric_limits<double>::infinity();
  std::size_t evals = 0;
  std::vector<double> iterBest;  // best-so-far after each iteration
};

}  // namespace

ProbeResult counterexample_search(const ProbeFamily& family, int n,
                                  double Dside, std::size_t iterations,
                                  std::size_t restarts, std::uint64_t seed,
                                  const PenaltyOptions& opts) {
  if (n < 2) throw Error("counterexample_search: n must be >= 2");
  if (restarts == 0) throw Error("counterexample_search: need >= 1 restart");
  const std::size_t dim = family.dims();
  const double delta = family.delta();
  const double D = family.diameter();

  std::vector<RestartOutcome> outcomes(restarts);
  parallel_for(restarts, [&](std::size_t r0, std::size_t r1) {
    for (std::size_t r = r0; r < r1; ++r) {
      RestartOutcome& out = outcomes[r];
      SplitMix64 rng{seed + 0x9E3779B97F4A7C15ULL * (r + 1)};

      auto evaluate = [&](const std::vector<double>& ambient) {
        ++out.evals;
        const double norm = l2_norm(ambient);
        if (norm < 1e-12) return kInadmissible;
        std::vector<double> proj(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          proj[i] = ambient[i] * (delta / norm);
        }
        double value;
        try {
          const std::unique_ptr<Curve> curve = family.realize(proj);
          value = penalty(*curve, D, n, Dside, opts);
        } catch (const Error&) {
          return kInadmissible;
        }
        if (value < out.best) {
          out.best = value;
          out.bestCoeffs = std::move(proj);
        }
        return value;
      };

      // initial simplex: dim+1 random directions on the sphere
      std::vector<std::vector<double>> pts(dim + 1);
      std::vector<double> vals(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) {
        std::vector<double> p(dim);
        double norm = 0.0;
        do {
          for (std::size_t k = 0; k < dim; ++k) p[k] = rng.gaussian();
          norm = l2_norm(p);
        } while (norm < 1e-12);
        for (std::size_t k = 0; k < dim; ++k) p[k] *= delta / norm;
        pts[i] = std::move(p);
        vals[i] = evaluate(pts[i]);
      }

      out.iterBest.reserve(iterations);
      for (std::size_t iter = 0; iter < iterations; ++iter) {
        // order by value, ties by current position (stable)
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
          return vals[a] < vals[b];
        });
        std::vector<std::vector<double>> spts(dim + 1);
        std::vector<double> svals(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
          spts[i] = std::move(pts[idx[i]]);
          svals[i] = vals[idx[i]];
        }
        pts = std::move(spts);
        vals = std::move(svals);

        if (vals[dim] - vals[0] < 1e-18) {
          out.iterBest.push_back(out.best);
          continue;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
        }
        for (std::size_t k = 0; k < dim; ++k) {
          centroid[k] /= static_cast<double>(dim);
        }

        auto blend = [&](const std::vector<double>& towards, double t) {
          std::vector<double> p(dim);
          for (std::size_t k = 0; k < dim; ++k) {
            p[k] = centroid[k] + t * (towards[k] - centroid[k]);
          }
          return p;
        };

        const std::vector<double> xr = blend(pts[dim], -1.0);
        const double fr = evaluate(xr);
        bool shrink = false;
        if (fr < vals[0]) {
          const std::vector<double> xe = blend(pts[dim], -2.0);
          const double fe = evaluate(xe);
          if (fe < fr) {
            pts[dim] = xe;
            vals[dim] = fe;
          } else {
            pts[dim] = xr;
            vals[dim] = fr;
          }
        } else if (fr < vals[dim - 1]) {
          pts[dim] = xr;
          vals[dim] = fr;
        } else if (fr < vals[dim]) {
          const std::vector<double> xc = blend(pts[dim], -0.5);
          const double fc = evaluate(xc);
          if (fc <= fr) {
            pts[dim] = xc;
            vals[dim] = fc;
          } else {
            shrink = true;
          }
        } else {
          const std::vector<double> xc = blend(pts[dim], 0.5);
          const double fc = evaluate(xc);
          if (fc < vals[dim]) {
            pts[dim] = xc;
            vals[dim] = fc;
          } else {
            shrink = true;
          }
        }
        if (shrink) {
          for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
              pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
            }
            vals[i] = evaluate(pts[i]);
          }
        }
        out.iterBest.push_back(out.best);
      }
    }
  });

  ProbeResult res;
  res.bestPenalty = std::numeric_limits<double>::infinity();
  res.trace.reserve(restarts * iterations);
  double running = std::numeric_limits<double>::infinity();
  std::size_t globalIter = 0;
  for (const RestartOutcome& out : outcomes) {
    for (const double v : out.iterBest) {
      running = std::min(running, v);
      res.trace.push_back({globalIter++, running});
    }
    res.evaluations += out.evals;
    if (out.best < res.bestPenalty) {
      res.bestPenalty = out.best;
      res.bestCoefficients = out.bestCoeffs;
    }
  }
  return res;
}

C2nReport probe_c2n(const Curve& curve, double D, int n,
                    const VerificationOptions& opts) {
  if (n < 2) throw Error("probe_c2n: n must be >= 2");
  C2nReport rep;
  rep.n = n;
  rep.D = D;
  rep.side = D * std::sin(kPi / (2 * n));
  rep.cd = check_constant_diameter(curve, D, opts);
  rep.cn = check_cn(curve, 2 * n, rep.side, opts);

  const std::size_t period = static_cast<std::size_t>(2 * n);
  std::size_t samples = 1024;
  samples = ((samples + period - 1) / period) * period;
  try {
    const MidpointRecovery rec = recover_midpoint_curve(curve, D, samples);
    rep.recovered = true;
    const std::size_t shift = samples / period;
    for (std::size_t j = 0; j < samples; ++j) {
      rep.gPeriodDefect = std::max(
          rep.gPeriodDefect, distance(rec.g[(j + shift) % samples], rec.g[j]));
      rep.maxOrthogonality =
          std::max(rep.maxOrthogonality, std::abs(rec.orthogonality[j]));
    }
  } catch (const NormalMiss&) {
    rep.recovered = false;
  } catch (const NonMonotoneAngle&) {
    rep.recovered = false;
  }
  rep.passed = rep.cd.passed && rep.cn.passed && rep.recovered &&
               rep.gPeriodDefect <= 1e-7 * D;
  return rep;
}

}  // namespace cw
