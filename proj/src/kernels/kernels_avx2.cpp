// AVX2 variants of the scalar reference kernels. Compiled with -mavx2 only;
// selected at runtime after a cpuid check. Multiplies and adds stay separate
// (no FMA) so results are bit-identical to the scalar path.

#include <immintrin.h>

#include "cw/kernels.hpp"

namespace cw::kernels::detail {

void squared_distances_avx2(const double* xs, const double* ys, std::size_t n,
                            double px, double py, double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
    _mm256_storeu_pd(out + i,
                     _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = dx * dx + dy * dy;
  }
}

namespace {

// Horizontal min/max over a __m256d.
inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  const __m128d s = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(s);
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  const __m128d s = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(s);
}

}  // namespace

MinMax projection_minmax_avx2(const double* xs, const double* ys, std::size_t n,
                              double ux, double uy) {
  // Pass 1: extreme values, vectorized. Pass 2: scalar scan for the first
  // index attaining each value (same per-lane arithmetic, so exact match).
  double minV = xs[0] * ux + ys[0] * uy;
  double maxV = minV;
  std::size_t i = 1;
  if (n >= 5) {
    const __m256d vux = _mm256_set1_pd(ux);
    const __m256d vuy = _mm256_set1_pd(uy);
    __m256d vmin = _mm256_set1_pd(minV);
    __m256d vmax = vmin;
    for (; i + 4 <= n; i += 4) {
      const __m256d p = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(xs + i), vux),
                                      _mm256_mul_pd(_mm256_loadu_pd(ys + i), vuy));
      vmin = _mm256_min_pd(vmin, p);
      vmax = _mm256_max_pd(vmax, p);
    }
    minV = hmin(vmin);
    maxV = hmax(vmax);
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

MinMax minmax_indexed_avx2(const double* values, std::size_t n) {
  double minV = values[0];
  double maxV = values[0];
  std::size_t i = 1;
  if (n >= 5) {
    __m256d vmin = _mm256_set1_pd(minV);
    __m256d vmax = vmin;
    for (; i + 4 <= n; i += 4) {
      const __m256d v = _mm256_loadu_pd(values + i);
      vmin = _mm256_min_pd(vmin, v);
      vmax = _mm256_max_pd(vmax, v);
    }
    minV = hmin(vmin);
    maxV = hmax(vmax);
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

void series_eval_avx2(const double* su, const double* cu, std::size_t n,
                      const PackedSeries& series, double* outX, double* outY) {
  const int maxFreq = series.maxFreq;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s1 = _mm256_loadu_pd(su + i);
    const __m256d c1 = _mm256_loadu_pd(cu + i);
    __m256d accX = _mm256_set1_pd(series.cx[0]);
    __m256d accY = _mm256_set1_pd(series.cy[0]);
    __m256d sm = s1;
    __m256d cm = c1;
    for (int m = 1; m <= maxFreq; ++m) {
      if (series.active[static_cast<std::size_t>(m)]) {
        const std::size_t f = static_cast<std::size_t>(m);
        accX = _mm256_add_pd(
            accX, _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(series.sx[f]), sm),
                                _mm256_mul_pd(_mm256_set1_pd(series.cx[f]), cm)));
        accY = _mm256_add_pd(
            accY, _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(series.sy[f]), sm),
                                _mm256_mul_pd(_mm256_set1_pd(series.cy[f]), cm)));
      }
      if (m < maxFreq) {
        const __m256d sn = _mm256_add_pd(_mm256_mul_pd(sm, c1), _mm256_mul_pd(cm, s1));
        const __m256d cn = _mm256_sub_pd(_mm256_mul_pd(cm, c1), _mm256_mul_pd(sm, s1));
        sm = sn;
        cm = cn;
      }
    }
    _mm256_storeu_pd(outX + i, accX);
    _mm256_storeu_pd(outY + i, accY);
  }
  if (i < n) {
    series_eval_scalar(su + i, cu + i, n - i, series, outX + i, outY + i);
  }
}

}  // namespace cw::kernels::detail
