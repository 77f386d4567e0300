#include "cw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cw/arc_curve.hpp"
#include "cw/errors.hpp"
#include "cw/geometry.hpp"
#include "cw/grid.hpp"
#include "cw/kernels.hpp"
#include "cw/optimize.hpp"
#include "cw/parallel.hpp"
#include "internal.hpp"

namespace cw {

namespace {

struct Tols {
  double value;
  double uniq;
  double membership;
};

Tols resolve_tols(const VerificationOptions& o, double D) {
  if (o.epsilonMargin < 0.0 || o.epsilonMargin >= kPi / 4.0) {
    throw Error("VerificationOptions: epsilonMargin must lie in [0, pi/4)");
  }
  if (o.thetaSamples < 8 || o.phiSamples < 32) {
    throw Error("VerificationOptions: grids too small");
  }
  return {o.valueTol > 0.0 ? o.valueTol : 1e-9 * D,
          o.uniqTol > 0.0 ? o.uniqTol : 1e-6 * D,
          o.membershipTol > 0.0 ? o.membershipTol : 1e-7 * D};
}

double wrap_to_pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  if (w > kPi) w -= kTwoPi;
  return w;
}

// Merges refined maxima closer than 1e-6 rad, keeping the higher value.
void merge_close_maxima(std::vector<detail::RefinedMax>& maxima) {
  if (maxima.size() < 2) return;
  std::vector<detail::RefinedMax> merged;
  merged.push_back(maxima.front());
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    if (maxima[i].phi - merged.back().phi < 1e-6) {
      if (maxima[i].value > merged.back().value) merged.back() = maxima[i];
    } else {
      merged.push_back(maxima[i]);
    }
  }
  maxima = std::move(merged);
}

}  // namespace

namespace detail {

ChordScanResult scan_chords(const Curve& curve, const CurveGrid& grid,
                            std::size_t baseIdx, double /*u0*/, bool /*sharedGrid*/,
                            std::vector<double>& buf) {
  const std::size_t N = grid.size;
  buf.resize(N);
  const Vec2 base = grid.point(baseIdx);
  // offsets j wrap around the grid: [baseIdx, N) then [0, baseIdx)
  kernels::squared_distances(grid.xs.data() + baseIdx, grid.ys.data() + baseIdx,
                             N - baseIdx, base.x, base.y, buf.data());
  if (baseIdx > 0) {
    kernels::squared_distances(grid.xs.data(), grid.ys.data(), baseIdx, base.x,
                               base.y, buf.data() + (N - baseIdx));
  }

  ChordScanResult res;
  const kernels::MinMax mm = kernels::minmax_indexed(buf.data(), N);
  res.gridMax = std::sqrt(mm.maxValue);
  res.gridArgmax = mm.maxIndex;

  const ChordFunction f{&curve, grid.param(baseIdx)};
  const double step = grid.step;
  for (std::size_t j = 1; j < N; ++j) {
    const double prev = buf[j - 1];
    const double next = buf[(j + 1) % N];
    // leftmost element of each flat run represents the basin
    if (!(buf[j] > prev && buf[j] >= next)) continue;
    const double lo = step * static_cast<double>(j - 1);
    const double hi = step * static_cast<double>(j + 1);
    const double phi = golden_max(f, lo, hi, 1e-12);
    res.maxima.push_back({phi, std::max(f(phi), std::sqrt(buf[j]))});
  }
  if (res.maxima.empty()) {
    // all-flat scan (e.g. perfect circle seen from its center-symmetric
    // grid); refine around the raw argmax
    const double mid = step * static_cast<double>(res.gridArgmax);
    const double phi = golden_max(f, mid - step, mid + step, 1e-12);
    res.maxima.push_back({phi, std::max(f(phi), res.gridMax)});
  }
  std::sort(res.maxima.begin(), res.maxima.end(),
            [](const RefinedMax& a, const RefinedMax& b) { return a.phi < b.phi; });
  merge_close_maxima(res.maxima);
  return res;
}

}  // namespace detail

VerificationReport check_constant_diameter(const Curve& curve, double D,
                                           const VerificationOptions& opts,
                                           bool requireUnique) {
  const Tols tols = resolve_tols(opts, D);
  const std::size_t T = opts.thetaSamples;
  const std::size_t M = opts.phiSamples;
  const bool shared = (M % T) == 0;

  VerificationReport rep;
  rep.property = "C(D)";
  rep.D = D;
  rep.n = 2;
  rep.requireUnique = requireUnique;
  rep.options = opts;
  rep.perBase.resize(T);

  const CurveGrid sharedGrid =
      shared ? CurveGrid::build(curve, M) : CurveGrid();

  parallel_for(T, [&](std::size_t b0, std::size_t b1) {
    std::vector<double> buf;
    for (std::size_t b = b0; b < b1; ++b) {
      const double baseU = kTwoPi * static_cast<double>(b) / static_cast<double>(T);
      detail::ChordScanResult scan;
      if (shared) {
        scan = detail::scan_chords(curve, sharedGrid, b * (M / T), baseU, true, buf);
      } else {
        const CurveGrid local = CurveGrid::build(curve, M, baseU);
        scan = detail::scan_chords(curve, local, 0, baseU, false, buf);
      }

      BaseRecord& rec = rep.perBase[b];
      rec.baseParam = baseU;
      rec.gridMax = scan.gridMax;
      rec.gridArgmax = scan.gridArgmax;

      std::size_t best = 0;
      for (std::size_t i = 1; i < scan.maxima.size(); ++i) {
        if (scan.maxima[i].value > scan.maxima[best].value) best = i;
      }
      rec.maxChord = scan.maxima[best].value;
      rec.argmaxPhi = scan.maxima[best].phi;

      double second = -1.0;
      for (std::size_t i = 0; i < scan.maxima.size(); ++i) {
        if (i == best) continue;
        second = std::max(second, scan.maxima[i].value);
      }
      rec.uniquenessGap = second < 0.0 ? kNoSecondMax : D - second;

      // Diametral plateau: three or more near-D points at offsets separated
      // by more than 1e-3 rad (single-link clustering at that scale). Raw
      // grid points within tolerance join the refined maxima so a flat run
      // is counted by its extent, not by how many jitter maxima it sheds.
      std::vector<double> nearD;
      for (const detail::RefinedMax& m : scan.maxima) {
        if (std::abs(m.value - D) <= tols.value) nearD.push_back(m.phi);
      }
      const double gridTol = 2.0 * D * tols.value;
      const double gridStep = kTwoPi / static_cast<double>(M);
      for (std::size_t j = 0; j < M; ++j) {
        if (std::abs(buf[j] - D * D) <= gridTol) {
          nearD.push_back(gridStep * static_cast<double>(j));
        }
      }
      std::sort(nearD.begin(), nearD.end());
      std::size_t clusters = 0;
      double lastPhi = -1.0;
      for (const double phi : nearD) {
        if (clusters == 0 || phi - lastPhi > 1e-3) {
          ++clusters;
          lastPhi = phi;
        }
      }
      rec.plateau = clusters >= 3;

      rec.passValue = std::abs(rec.maxChord - D) <= tols.value;
      rec.passUnique =
          !rec.plateau && (second < 0.0 || second < D - tols.uniq);
      rec.pass = rec.passValue && (!requireUnique || rec.passUnique);
    }
  });

  rep.passed = true;
  std::size_t firstFail = T;
  for (std::size_t b = 0; b < T; ++b) {
    const BaseRecord& rec = rep.perBase[b];
    rep.worstValueDefect = std::max(rep.worstValueDefect, std::abs(rec.maxChord - D));
    if (rec.plateau) ++rep.plateauBases;
    if (!rec.pass) {
      rep.passed = false;
      ++rep.failingBases;
      if (firstFail == T) firstFail = b;
    }
  }
  if (firstFail != T) {
    rep.worstBase = firstFail;
  } else {
    std::size_t w = 0;
    for (std::size_t b = 1; b < T; ++b) {
      if (std::abs(rep.perBase[b].maxChord - D) >
          std::abs(rep.perBase[w].maxChord - D)) {
        w = b;
      }
    }
    rep.worstBase = w;
  }
  return rep;
}

namespace detail {

std::vector<DistancePoint> points_from_scan(const Curve& curve,
                                            const CurveGrid& grid,
                                            std::size_t baseIdx,
                                            const ChordScanResult& scan,
                                            const std::vector<double>& buf,
                                            double D, double valueTol,
                                            double eps) {
  const std::size_t N = grid.size;
  const double step = grid.step;
  const ChordFunction f{&curve, grid.param(baseIdx)};
  auto g = [&f, D](double phi) { return f(phi) - D; };

  std::vector<DistancePoint> tangential;
  for (const RefinedMax& m : scan.maxima) {
    if (std::abs(m.value - D) <= valueTol) {
      tangential.push_back({m.phi, DistanceKind::Tangential});
    }
  }

  std::vector<DistancePoint> transversal;
  const double D2 = D * D;
  for (std::size_t j = 0; j < N; ++j) {
    const double gj = buf[j] - D2;
    const double gk = buf[(j + 1) % N] - D2;
    if (!((gj == 0.0 && gk != 0.0) || gj * gk < 0.0)) continue;
    const double lo = step * static_cast<double>(j);
    const double hi = step * static_cast<double>(j + 1);
    // the grid buffer and the chord function round differently; trust the
    // chord function for the final bracket, and when it contradicts the
    // grid the level line passes within noise of an endpoint
    const double flo = g(lo);
    const double fhi = g(hi);
    double root;
    if (flo == 0.0) {
      root = lo;
    } else if (fhi == 0.0) {
      root = hi;
    } else if (flo * fhi < 0.0) {
      root = bisect_root(g, lo, hi, 1e-13);
    } else {
      root = std::abs(flo) <= std::abs(fhi) ? lo : hi;
    }
    // a touch owns any crossing the grid sees within two steps of it
    bool owned = false;
    for (const DistancePoint& t : tangential) {
      if (std::abs(root - t.phi) <= 2.0 * step) {
        owned = true;
        break;
      }
    }
    if (!owned) transversal.push_back({root, DistanceKind::Transversal});
  }

  auto dedupe = [](std::vector<DistancePoint>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const DistancePoint& a, const DistancePoint& b) {
                return a.phi < b.phi;
              });
    std::vector<DistancePoint> out;
    for (const DistancePoint& p : pts) {
      if (!out.empty() && p.phi - out.back().phi < 1e-9) continue;
      out.push_back(p);
    }
    pts = std::move(out);
  };
  dedupe(tangential);
  dedupe(transversal);

  std::vector<DistancePoint> all;
  for (const DistancePoint& p : tangential) {
    if (p.phi >= eps && p.phi <= kTwoPi - eps) all.push_back(p);
  }
  for (const DistancePoint& p : transversal) {
    if (p.phi >= eps && p.phi <= kTwoPi - eps) all.push_back(p);
  }
  std::sort(all.begin(), all.end(),
            [](const DistancePoint& a, const DistancePoint& b) {
              return a.phi < b.phi;
            });
  return all;
}

std::vector<DistancePoint> find_points_on_grid(const Curve& curve,
                                               const CurveGrid& grid,
                                               std::size_t baseIdx, double D,
                                               double valueTol, double eps,
                                               std::vector<double>& buf) {
  const ChordScanResult scan =
      scan_chords(curve, grid, baseIdx, grid.param(baseIdx), true, buf);
  return points_from_scan(curve, grid, baseIdx, scan, buf, D, valueTol, eps);
}

}  // namespace detail

std::vector<DistancePoint> find_points_at_distance(const Curve& curve, double u0,
                                                   double D,
                                                   const VerificationOptions& opts) {
  const Tols tols = resolve_tols(opts, D);
  const CurveGrid grid = CurveGrid::build(curve, opts.phiSamples, u0);
  std::vector<double> buf;
  return detail::find_points_on_grid(curve, grid, 0, D, tols.value,
                                     opts.epsilonMargin, buf);
}

namespace {

// Workspace shared across the bases of one verification run.
struct NGonMachine {
  const Curve& curve;
  const CurveGrid& membership;
  double D;
  int n;
  Tols tols;
  double eps;
  double scale;

  std::vector<NGonWitness> run(const CurveGrid& grid, std::size_t baseIdx,
                               std::vector<double>& chordBuf,
                               std::vector<double>& nearBuf) const {
    const double baseU = grid.param(baseIdx);
    const std::vector<DistancePoint> sols = detail::find_points_on_grid(
        curve, grid, baseIdx, D, tols.value, eps, chordBuf);
    const Vec2 x = curve.eval(baseU);
    std::vector<NGonWitness> wits;

    if (n == 2) {
      for (const DistancePoint& s : sols) {
        const Vec2 y = curve.eval(baseU + s.phi);
        const Vec2 v1 = x + D * (y - x).normalized();
        NGonWitness w;
        w.baseParam = baseU;
        w.orientation = Orientation::CCW;
        w.vertices = {x, v1};
        w.residuals = {0.0,
                       detail::nearest_on_grid(curve, membership, v1, nearBuf).dist};
        w.maxResidual = w.residuals[1];
        wits.push_back(std::move(w));
      }
      dedupe(wits);
      return wits;
    }

    const double h = 0.5 * D / std::tan(kPi / n);
    for (const DistancePoint& s : sols) {
      const Vec2 y = curve.eval(baseU + s.phi);
      const Vec2 mid = 0.5 * (x + y);
      const Vec2 nHat = (y - x).normalized().perp();
      for (const double sigma : {1.0, -1.0}) {
        const Vec2 c = mid + sigma * h * nHat;
        NGonWitness w;
        w.baseParam = baseU;
        w.orientation = sigma > 0.0 ? Orientation::CCW : Orientation::CW;
        w.vertices.resize(static_cast<std::size_t>(n));
        w.residuals.assign(static_cast<std::size_t>(n), 0.0);
        w.vertices[0] = x;
        bool ok = true;
        for (int k = 1; k < n; ++k) {
          const Vec2 v = c + (x - c).rotated(sigma * kTwoPi * k / n);
          w.vertices[static_cast<std::size_t>(k)] = v;
          const double res =
              detail::nearest_on_grid(curve, membership, v, nearBuf).dist;
          w.residuals[static_cast<std::size_t>(k)] = res;
          w.maxResidual = std::max(w.maxResidual, res);
          if (res >= tols.membership) {
            ok = false;
            break;
          }
        }
        if (ok) wits.push_back(std::move(w));
      }
    }
    dedupe(wits);
    return wits;
  }

 private:
  // Same vertex set under cyclic order or reversal, matched within
  // 1e-9 * scale.
  bool same_polygon(const NGonWitness& a, const NGonWitness& b) const {
    const std::size_t m = a.vertices.size();
    if (b.vertices.size() != m) return false;
    const double tol = 1e-9 * scale;
    const int mi = static_cast<int>(m);
    for (int off = 0; off < mi; ++off) {
      for (const int dir : {1, -1}) {
        bool match = true;
        for (int k = 0; k < mi && match; ++k) {
          const int bi = ((off + dir * k) % mi + mi) % mi;
          match = distance(a.vertices[static_cast<std::size_t>(k)],
                           b.vertices[static_cast<std::size_t>(bi)]) <= tol;
        }
        if (match) return true;
      }
    }
    return false;
  }

  void dedupe(std::vector<NGonWitness>& wits) const {
    std::vector<NGonWitness> out;
    for (NGonWitness& w : wits) {
      bool dup = false;
      for (const NGonWitness& kept : out) {
        if (same_polygon(kept, w)) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(std::move(w));
    }
    wits = std::move(out);
  }
};

}  // namespace

std::vector<NGonWitness> find_inscribed_ngons(const Curve& curve, double u0, int n,
                                              double D,
                                              const VerificationOptions& opts) {
  if (n < 2) throw Error("find_inscribed_ngons: n must be >= 2");
  const Tols tols = resolve_tols(opts, D);
  const CurveGrid grid = CurveGrid::build(curve, opts.phiSamples, u0);
  const CurveGrid membership = CurveGrid::build(curve, 4096);
  const NGonMachine machine{curve,           membership, D, n, tols,
                            opts.epsilonMargin, curve.scale()};
  std::vector<double> chordBuf, nearBuf;
  return machine.run(grid, 0, chordBuf, nearBuf);
}

VerificationReport check_cn(const Curve& curve, int n, double D,
                            const VerificationOptions& opts) {
  if (n < 2) throw Error("check_cn: n must be >= 2");
  const Tols tols = resolve_tols(opts, D);
  const std::size_t T = opts.thetaSamples;
  const std::size_t M = opts.phiSamples;
  const bool shared = (M % T) == 0;

  VerificationReport rep;
  rep.property = "C_n(D)";
  rep.passed = false;
  rep.D = D;
  rep.n = n;
  rep.requireUnique = true;
  rep.options = opts;
  rep.perBase.resize(T);

  const CurveGrid sharedGrid = shared ? CurveGrid::build(curve, M) : CurveGrid();
  const CurveGrid membership = CurveGrid::build(curve, 4096);
  const NGonMachine machine{curve,           membership, D, n, tols,
                            opts.epsilonMargin, curve.scale()};

  parallel_for(T, [&](std::size_t b0, std::size_t b1) {
    std::vector<double> chordBuf, nearBuf;
    for (std::size_t b = b0; b < b1; ++b) {
      const double baseU = kTwoPi * static_cast<double>(b) / static_cast<double>(T);
      std::vector<NGonWitness> wits;
      if (shared) {
        wits = machine.run(sharedGrid, b * (M / T), chordBuf, nearBuf);
      } else {
        const CurveGrid local = CurveGrid::build(curve, M, baseU);
        wits = machine.run(local, 0, chordBuf, nearBuf);
      }
      BaseRecord& rec = rep.perBase[b];
      rec.baseParam = baseU;
      rec.witnessCount = wits.size();
      for (const NGonWitness& w : wits) {
        rec.worstResidual = std::max(rec.worstResidual, w.maxResidual);
      }
      rec.pass = wits.size() == 1;
      rec.witnesses = std::move(wits);
    }
  });

  rep.passed = true;
  std::size_t firstFail = T;
  for (std::size_t b = 0; b < T; ++b) {
    const BaseRecord& rec = rep.perBase[b];
    rep.worstResidual = std::max(rep.worstResidual, rec.worstResidual);
    if (!rec.pass) {
      rep.passed = false;
      ++rep.failingBases;
      if (firstFail == T) firstFail = b;
    }
  }
  if (firstFail != T) {
    rep.worstBase = firstFail;
  } else {
    std::size_t w = 0;
    for (std::size_t b = 1; b < T; ++b) {
      if (rep.perBase[b].worstResidual > rep.perBase[w].worstResidual) w = b;
    }
    rep.worstBase = w;
  }
  return rep;
}

MidpointRecovery recover_midpoint_curve(const Curve& curve, double D,
                                        std::size_t samples) {
  if (samples < 16) throw Error("recover_midpoint_curve: samples must be >= 16");
  const std::size_t S = samples;
  const double h = kTwoPi / static_cast<double>(S);
  const double residualTol = 1e-7 * D;
  const CurveGrid membership = CurveGrid::build(curve, 4096);
  std::vector<double> nearBuf;

  // normal direction -n at u, the direction from y(u) back to gamma(u)
  auto chord_dir_angle = [&curve](double u) {
    const Vec2 t = curve.eval(u, 1).normalized();
    return std::atan2(-t.x, t.y);
  };

  MidpointRecovery out;
  out.theta.resize(S);
  out.g.resize(S);
  out.r.resize(S);
  out.orthogonality.resize(S);

  std::vector<double> psi(S + 1);
  for (std::size_t i = 0; i < S; ++i) {
    const double u = h * static_cast<double>(i);
    const Vec2 p = curve.eval(u);
    const Vec2 t = curve.eval(u, 1).normalized();
    const Vec2 y = p + D * t.perp();
    const double res = detail::nearest_on_grid(curve, membership, y, nearBuf).dist;
    out.maxNormalResidual = std::max(out.maxNormalResidual, res);
    if (res > residualTol) {
      throw NormalMiss("normal construction leaves the curve by " +
                       std::to_string(res) + " at u=" + std::to_string(u));
    }
    psi[i] = chord_dir_angle(u);
  }
  psi[S] = psi[0];

  // unwrap into a strictly increasing lift covering one turn
  std::vector<double> lift(S + 1);
  lift[0] = psi[0];
  for (std::size_t i = 0; i < S; ++i) {
    const double d = wrap_to_pi(psi[i + 1] - psi[i]);
    if (d <= 0.0) {
      throw NonMonotoneAngle("chord angle steps backwards near u=" +
                             std::to_string(h * static_cast<double>(i)));
    }
    lift[i + 1] = lift[i] + d;
  }
  if (std::abs(lift[S] - lift[0] - kTwoPi) > 1e-6) {
    throw NonMonotoneAngle("chord angle winds " +
                           std::to_string(lift[S] - lift[0]) +
                           " instead of 2*pi");
  }

  for (std::size_t j = 0; j < S; ++j) {
    const double thetaJ = h * static_cast<double>(j);
    out.theta[j] = thetaJ;
    double tau = thetaJ;
    while (tau < lift[0]) tau += kTwoPi;
    while (tau >= lift[0] + kTwoPi) tau -= kTwoPi;
    const auto it = std::upper_bound(lift.begin(), lift.end(), tau);
    std::size_t i = static_cast<std::size_t>(it - lift.begin());
    i = (i == 0) ? 0 : i - 1;
    i = std::min(i, S - 1);

    const double uLo = h * static_cast<double>(i);
    const double psiLo = psi[i];
    const double liftLo = lift[i];
    auto gfun = [&](double u) {
      return liftLo + wrap_to_pi(chord_dir_angle(u) - psiLo) - tau;
    };
    double uStar;
    if (gfun(uLo) == 0.0) {
      uStar = uLo;
    } else {
      uStar = bisect_root(gfun, uLo, uLo + h, 1e-12);
    }
    const Vec2 p = curve.eval(uStar);
    const Vec2 t = curve.eval(uStar, 1).normalized();
    out.g[j] = p + (0.5 * D) * t.perp();
  }

  for (std::size_t j = 0; j < S; ++j) {
    const Vec2& gp2 = out.g[(j + 2) % S];
    const Vec2& gp1 = out.g[(j + 1) % S];
    const Vec2& gm1 = out.g[(j + S - 1) % S];
    const Vec2& gm2 = out.g[(j + S - 2) % S];
    const Vec2 dG = (gm2 - gp2 + 8.0 * (gp1 - gm1)) / (12.0 * h);
    const double c = std::cos(out.theta[j]);
    const double s = std::sin(out.theta[j]);
    out.r[j] = dG.dot({-s, c});
    out.orthogonality[j] = dG.dot({c, s});
  }
  return out;
}

SquareCenterReport check_square_center_property(const Curve& curve, double D,
                                                const VerificationOptions& opts) {
  const double side = D / std::sqrt(2.0);
  const Tols tols = resolve_tols(opts, side);
  const std::size_t T = opts.thetaSamples;
  const std::size_t M = opts.phiSamples;
  const bool shared = (M % T) == 0;

  SquareCenterReport rep;
  rep.side = side;
  rep.perBase.resize(T);

  const CurveGrid sharedGrid = shared ? CurveGrid::build(curve, M) : CurveGrid();
  const CurveGrid membership = CurveGrid::build(curve, 4096);
  const NGonMachine machine{curve,           membership, side, 4, tols,
                            opts.epsilonMargin, curve.scale()};

  parallel_for(T, [&](std::size_t b0, std::size_t b1) {
    std::vector<double> chordBuf, nearBuf;
    for (std::size_t b = b0; b < b1; ++b) {
      const double baseU = kTwoPi * static_cast<double>(b) / static_cast<double>(T);
      std::vector<NGonWitness> wits;
      if (shared) {
        wits = machine.run(sharedGrid, b * (M / T), chordBuf, nearBuf);
      } else {
        const CurveGrid local = CurveGrid::build(curve, M, baseU);
        wits = machine.run(local, 0, chordBuf, nearBuf);
      }
      SquareCenterRecord& rec = rep.perBase[b];
      rec.baseParam = baseU;
      rec.witnessCount = wits.size();
      if (wits.size() == 1) {
        const NGonWitness& w = wits.front();
        const Vec2 p = curve.eval(baseU);
        const Vec2 t = curve.eval(baseU, 1).normalized();
        const Vec2 y = p + D * t.perp();
        rec.diagonalDefect = distance(w.vertices[2], y);
        Vec2 center{0.0, 0.0};
        for (const Vec2& v : w.vertices) center += v;
        center = center / 4.0;
        rec.centerDefect = distance(center, 0.5 * (p + y));
      }
    }
  });

  rep.passed = true;
  for (std::size_t b = 0; b < T; ++b) {
    const SquareCenterRecord& rec = rep.perBase[b];
    if (rec.witnessCount != 1) {
      rep.countAnomalies.push_back(b);
      continue;
    }
    rep.worstDiagonalDefect = std::max(rep.worstDiagonalDefect, rec.diagonalDefect);
    rep.worstCenterDefect = std::max(rep.worstCenterDefect, rec.centerDefect);
    if (rec.diagonalDefect > tols.membership || rec.centerDefect > tols.membership) {
      rep.passed = false;
    }
  }
  return rep;
}

namespace {

double max_tangent_step(const Curve& curve, std::size_t n, double* argmaxU) {
  const double step = kTwoPi / static_cast<double>(n);
  double prev = curve.eval(0.0, 1).angle();
  double worst = 0.0;
  double worstU = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = step * static_cast<double>(i);
    const double cur = curve.eval(u, 1).angle();
    const double jump = std::abs(wrap_to_pi(cur - prev));
    if (jump > worst) {
      worst = jump;
      worstU = u;
    }
    prev = cur;
  }
  if (argmaxU) *argmaxU = worstU;
  return worst;
}

}  // namespace

double corner_certificate_ratio(const Curve& curve, std::size_t samples) {
  const double coarse = max_tangent_step(curve, samples, nullptr);
  const double fine = max_tangent_step(curve, 2 * samples, nullptr);
  if (fine == 0.0) return 2.0;
  return coarse / fine;
}

std::vector<Corner> detect_corners(const Curve& curve) {
  std::vector<Corner> corners;
  if (const auto* arc = dynamic_cast<const PiecewiseArcCurve*>(&curve)) {
    const auto& arcs = arc->arcs();
    const auto& params = arc->junction_params();
    const std::size_t n = arcs.size();
    for (std::size_t i = 0; i < n; ++i) {
      const ArcSegment& prev = arcs[(i + n - 1) % n];
      const ArcSegment& cur = arcs[i];
      // ccw arcs carry tangent angle (circle angle + pi/2); the offsets cancel
      const double jump = wrap_to_pi(cur.startAngle - prev.endAngle);
      if (std::abs(jump) > 1e-6) corners.push_back({params[i], jump});
    }
    return corners;
  }
  // smooth families: the largest tangent step must halve when the grid
  // doubles; a ratio stuck near 1 pins a genuine jump
  const std::size_t n = 8192;
  double worstU = 0.0;
  const double coarse = max_tangent_step(curve, n, &worstU);
  const double fine = max_tangent_step(curve, 2 * n, nullptr);
  if (fine > 0.0 && coarse / fine < 1.5 && coarse > 1e-6) {
    corners.push_back({wrap_angle(worstU), coarse});
  }
  return corners;
}

}  // namespace cw
