#pragma once

#include <cstddef>
#include <vector>

namespace cw::kernels {

// Dense trigonometric polynomial, one coefficient slot per frequency.
// Slot 0 holds the constant (in cx/cy); sx[0]/sy[0] are unused.
// active[f] marks frequencies with at least one nonzero coefficient so both
// backends skip the same terms and produce identical accumulation sequences.
struct PackedSeries {
  int maxFreq = 0;
  std::vector<double> sx, cx, sy, cy;
  std::vector<unsigned char> active;
};

struct MinMax {
  double minValue;
  std::size_t minIndex;
  double maxValue;
  std::size_t maxIndex;
};

// out[i] = (xs[i]-px)^2 + (ys[i]-py)^2
void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* out);

// Min/max of xs[i]*ux + ys[i]*uy with the lowest index on ties.
MinMax projection_minmax(const double* xs, const double* ys, std::size_t n,
                         double ux, double uy);

// Min/max of values[i] with the lowest index on ties. n must be >= 1.
MinMax minmax_indexed(const double* values, std::size_t n);

// Evaluates both components of a packed series at points whose sine/cosine
// are given in su/cu. Higher harmonics come from the angle-addition
// recurrence, applied in the same order by every backend.
void series_eval(const double* su, const double* cu, std::size_t n,
                 const PackedSeries& series, double* outX, double* outY);

// Name of the backend currently selected at runtime: "scalar", "avx2", "neon".
const char* active_backend();

// Test hook: force the scalar reference path regardless of CPU support.
void force_scalar(bool on);

namespace detail {

void squared_distances_scalar(const double* xs, const double* ys, std::size_t n,
                              double px, double py, double* out);
MinMax projection_minmax_scalar(const double* xs, const double* ys, std::size_t n,
                                double ux, double uy);
MinMax minmax_indexed_scalar(const double* values, std::size_t n);
void series_eval_scalar(const double* su, const double* cu, std::size_t n,
                        const PackedSeries& series, double* outX, double* outY);

#if defined(CW_BUILD_AVX2)
void squared_distances_avx2(const double* xs, const double* ys, std::size_t n,
                            double px, double py, double* out);
MinMax projection_minmax_avx2(const double* xs, const double* ys, std::size_t n,
                              double ux, double uy);
MinMax minmax_indexed_avx2(const double* values, std::size_t n);
void series_eval_avx2(const double* su, const double* cu, std::size_t n,
                      const PackedSeries& series, double* outX, double* outY);
#endif

#if defined(CW_BUILD_NEON)
void squared_distances_neon(const double* xs, const double* ys, std::size_t n,
                            double px, double py, double* out);
MinMax projection_minmax_neon(const double* xs, const double* ys, std::size_t n,
                              double ux, double uy);
MinMax minmax_indexed_neon(const double* values, std::size_t n);
void series_eval_neon(const double* su, const double* cu, std::size_t n,
                      const PackedSeries& series, double* outX, double* outY);
#endif

}  // namespace detail

}  // namespace cw::kernels
