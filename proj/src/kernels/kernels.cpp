#include "cw/kernels.hpp"

#include <atomic>

namespace cw::kernels {

namespace detail {

void squared_distances_scalar(const double* xs, const double* ys, std::size_t n,
                              double px, double py, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = dx * dx + dy * dy;
  }
}

MinMax projection_minmax_scalar(const double* xs, const double* ys, std::size_t n,
                                double ux, double uy) {
  MinMax r{xs[0] * ux + ys[0] * uy, 0, xs[0] * ux + ys[0] * uy, 0};
  for (std::size_t i = 1; i < n; ++i) {
    const double p = xs[i] * ux + ys[i] * uy;
    if (p < r.minValue) {
      r.minValue = p;
      r.minIndex = i;
    }
    if (p > r.maxValue) {
      r.maxValue = p;
      r.maxIndex = i;
    }
  }
  return r;
}

MinMax minmax_indexed_scalar(const double* values, std::size_t n) {
  MinMax r{values[0], 0, values[0], 0};
  for (std::size_t i = 1; i < n; ++i) {
    const double v = values[i];
    if (v < r.minValue) {
      r.minValue = v;
      r.minIndex = i;
    }
    if (v > r.maxValue) {
      r.maxValue = v;
      r.maxIndex = i;
    }
  }
  return r;
}

void series_eval_scalar(const double* su, const double* cu, std::size_t n,
                        const PackedSeries& series, double* outX, double* outY) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s1 = su[i];
    const double c1 = cu[i];
    double accX = series.cx[0];
    double accY = series.cy[0];
    double sm = s1;
    double cm = c1;
    for (int m = 1; m <= series.maxFreq; ++m) {
      if (series.active[static_cast<std::size_t>(m)]) {
        const std::size_t f = static_cast<std::size_t>(m);
        accX += series.sx[f] * sm + series.cx[f] * cm;
        accY += series.sy[f] * sm + series.cy[f] * cm;
      }
      if (m < series.maxFreq) {
        const double sn = sm * c1 + cm * s1;
        const double cn = cm * c1 - sm * s1;
        sm = sn;
        cm = cn;
      }
    }
    outX[i] = accX;
    outY[i] = accY;
  }
}

}  // namespace detail

namespace {

std::atomic<bool> g_force_scalar{false};

enum class Backend { Scalar, Avx2, Neon };

Backend detect_backend() {
#if defined(CW_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(CW_BUILD_NEON)
  return Backend::Neon;
#endif
  return Backend::Scalar;
}

Backend backend() {
  static const Backend b = detect_backend();
  if (g_force_scalar.load(std::memory_order_relaxed)) return Backend::Scalar;
  return b;
}

}  // namespace

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const char* active_backend() {
  switch (backend()) {
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
    default:
      return "scalar";
  }
}

void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* out) {
  switch (backend()) {
#if defined(CW_BUILD_AVX2)
    case Backend::Avx2:
      detail::squared_distances_avx2(xs, ys, n, px, py, out);
      return;
#endif
#if defined(CW_BUILD_NEON)
    case Backend::Neon:
      detail::squared_distances_neon(xs, ys, n, px, py, out);
      return;
#endif
    default:
      detail::squared_distances_scalar(xs, ys, n, px, py, out);
      return;
  }
}

MinMax projection_minmax(const double* xs, const double* ys, std::size_t n,
                         double ux, double uy) {
  switch (backend()) {
#if defined(CW_BUILD_AVX2)
    case Backend::Avx2:
      return detail::projection_minmax_avx2(xs, ys, n, ux, uy);
#endif
#if defined(CW_BUILD_NEON)
    case Backend::Neon:
      return detail::projection_minmax_neon(xs, ys, n, ux, uy);
#endif
    default:
      return detail::projection_minmax_scalar(xs, ys, n, ux, uy);
  }
}

MinMax minmax_indexed(const double* values, std::size_t n) {
  switch (backend()) {
#if defined(CW_BUILD_AVX2)
    case Backend::Avx2:
      return detail::minmax_indexed_avx2(values, n);
#endif
#if defined(CW_BUILD_NEON)
    case Backend::Neon:
      return detail::minmax_indexed_neon(values, n);
#endif
    default:
      return detail::minmax_indexed_scalar(values, n);
  }
}

void series_eval(const double* su, const double* cu, std::size_t n,
                 const PackedSeries& series, double* outX, double* outY) {
  switch (backend()) {
#if defined(CW_BUILD_AVX2)
    case Backend::Avx2:
      detail::series_eval_avx2(su, cu, n, series, outX, outY);
      return;
#endif
#if defined(CW_BUILD_NEON)
    case Backend::Neon:
      detail::series_eval_neon(su, cu, n, series, outX, outY);
      return;
#endif
    default:
      detail::series_eval_scalar(su, cu, n, series, outX, outY);
      return;
  }
}

}  // namespace cw::kernels
