// NEON variants of the scalar reference kernels (aarch64, where NEON is
// baseline). Mirrors the AVX2 file: separate multiplies and adds, runtime
// results bit-identical to the scalar path.

#include <arm_neon.h>

#include "cw/kernels.hpp"

namespace cw::kernels::detail {

void squared_distances_neon(const double* xs, const double* ys, std::size_t n,
                            double px, double py, double* out) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vpx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vpy);
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = dx * dx + dy * dy;
  }
}

MinMax projection_minmax_neon(const double* xs, const double* ys, std::size_t n,
                              double ux, double uy) {
  double minV = xs[0] * ux + ys[0] * uy;
  double maxV = minV;
  std::size_t i = 1;
  if (n >= 3) {
    const float64x2_t vux = vdupq_n_f64(ux);
    const float64x2_t vuy = vdupq_n_f64(uy);
    float64x2_t vmin = vdupq_n_f64(minV);
    float64x2_t vmax = vmin;
    for (; i + 2 <= n; i += 2) {
      const float64x2_t p = vaddq_f64(vmulq_f64(vld1q_f64(xs + i), vux),
                                      vmulq_f64(vld1q_f64(ys + i), vuy));
      vmin = vminq_f64(vmin, p);
      vmax = vmaxq_f64(vmax, p);
    }
    minV = vminvq_f64(vmin);
    maxV = vmaxvq_f64(vmax);
  }
  for (; i < n; ++i) {
    const double p = xs[i] * ux + ys[i] * uy;
    if (p < minV) minV = p;
    if (p > maxV) maxV = p;
  }
  MinMax r{minV, 0, maxV, 0};
  bool haveMin = false, haveMax = false;
  for (std::size_t j = 0; j < n && !(haveMin && haveMax); ++j) {
    const double p = xs[j] * ux + ys[j] * uy;
    if (!haveMin && p == minV) {
      r.minIndex = j;
      haveMin = true;
    }
    if (!haveMax && p == maxV) {
      r.maxIndex = j;
      haveMax = true;
    }
  }
  return r;
}

MinMax minmax_indexed_neon(const double* values, std::size_t n) {
  double minV = values[0];
  double maxV = values[0];
  std::size_t i = 1;
  if (n >= 3) {
    float64x2_t vmin = vdupq_n_f64(minV);
    float64x2_t vmax = vmin;
    for (; i + 2 <= n; i += 2) {
      const float64x2_t v = vld1q_f64(values + i);
      vmin = vminq_f64(vmin, v);
      vmax = vmaxq_f64(vmax, v);
    }
    minV = vminvq_f64(vmin);
    maxV = vmaxvq_f64(vmax);
  }
  for (; i < n; ++i) {
    if (values[i] < minV) minV = values[i];
    if (values[i] > maxV) maxV = values[i];
  }
  MinMax r{minV, 0, maxV, 0};
  bool haveMin = false, haveMax = false;
  for (std::size_t j = 0; j < n && !(haveMin && haveMax); ++j) {
    if (!haveMin && values[j] == minV) {
      r.minIndex = j;
      haveMin = true;
    }
    if (!haveMax && values[j] == maxV) {
      r.maxIndex = j;
      haveMax = true;
    }
  }
  return r;
}

void series_eval_neon(const double* su, const double* cu, std::size_t n,
                      const PackedSeries& series, double* outX, double* outY) {
  const int maxFreq = series.maxFreq;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t s1 = vld1q_f64(su + i);
    const float64x2_t c1 = vld1q_f64(cu + i);
    float64x2_t accX = vdupq_n_f64(series.cx[0]);
    float64x2_t accY = vdupq_n_f64(series.cy[0]);
    float64x2_t sm = s1;
    float64x2_t cm = c1;
    for (int m = 1; m <= maxFreq; ++m) {
      if (series.active[static_cast<std::size_t>(m)]) {
        const std::size_t f = static_cast<std::size_t>(m);
        accX = vaddq_f64(accX, vaddq_f64(vmulq_f64(vdupq_n_f64(series.sx[f]), sm),
                                         vmulq_f64(vdupq_n_f64(series.cx[f]), cm)));
        accY = vaddq_f64(accY, vaddq_f64(vmulq_f64(vdupq_n_f64(series.sy[f]), sm),
                                         vmulq_f64(vdupq_n_f64(series.cy[f]), cm)));
      }
      if (m < maxFreq) {
        const float64x2_t sn = vaddq_f64(vmulq_f64(sm, c1), vmulq_f64(cm, s1));
        const float64x2_t cn = vsubq_f64(vmulq_f64(cm, c1), vmulq_f64(sm, s1));
        sm = sn;
        cm = cn;
      }
    }
    vst1q_f64(outX + i, accX);
    vst1q_f64(outY + i, accY);
  }
  if (i < n) {
    series_eval_scalar(su + i, cu + i, n - i, series, outX + i, outY + i);
  }
}

}  // namespace cw::kernels::detail
