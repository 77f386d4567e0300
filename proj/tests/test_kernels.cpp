#include "doctest.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "cw/kernels.hpp"
#include "cw/trig_series.hpp"

namespace {

using cw::kernels::MinMax;

// Restores automatic dispatch even when a CHECK fails mid-test.
struct ScalarGuard {
  explicit ScalarGuard(bool on) { cw::kernels::force_scalar(on); }
  ~ScalarGuard() { cw::kernels::force_scalar(false); }
};

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                  double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

const std::vector<std::size_t> kSizes = {1, 2, 3, 4, 5, 7, 8, 13, 16, 31, 32, 100, 257};

}  // namespace

TEST_CASE("active backend reports a known name and honors the scalar override") {
  const std::string name = cw::kernels::active_backend();
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
  {
    ScalarGuard guard(true);
    CHECK(std::string(cw::kernels::active_backend()) == "scalar");
  }
  CHECK(std::string(cw::kernels::active_backend()) == name);
}

TEST_CASE("squared_distances: dispatched backend matches scalar bit for bit") {
  std::mt19937_64 rng(12345);
  for (std::size_t n : kSizes) {
    const std::vector<double> xs = random_vector(rng, n);
    const std::vector<double> ys = random_vector(rng, n);
    const double px = 0.3, py = -1.7;

    std::vector<double> fast(n), slow(n);
    cw::kernels::squared_distances(xs.data(), ys.data(), n, px, py, fast.data());
    {
      ScalarGuard guard(true);
      cw::kernels::squared_distances(xs.data(), ys.data(), n, px, py, slow.data());
    }
    for (std::size_t i = 0; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(same_bits(fast[i], slow[i]));
    }
  }
}

TEST_CASE("projection_minmax: values and indices match the scalar path") {
  std::mt19937_64 rng(777);
  for (std::size_t n : kSizes) {
    const std::vector<double> xs = random_vector(rng, n);
    const std::vector<double> ys = random_vector(rng, n);
    const double ux = 0.6, uy = 0.8;

    const MinMax fast = cw::kernels::projection_minmax(xs.data(), ys.data(), n, ux, uy);
    MinMax slow;
    {
      ScalarGuard guard(true);
      slow = cw::kernels::projection_minmax(xs.data(), ys.data(), n, ux, uy);
    }
    CAPTURE(n);
    CHECK(same_bits(fast.minValue, slow.minValue));
    CHECK(same_bits(fast.maxValue, slow.maxValue));
    CHECK(fast.minIndex == slow.minIndex);
    CHECK(fast.maxIndex == slow.maxIndex);
  }
}

TEST_CASE("projection_minmax: exact ties resolve to the lowest index in both paths") {
  // Duplicated extremes placed within one SIMD block (3, 4) and across
  // blocks (3, 11), plus a duplicated minimum in the scalar tail.
  std::vector<double> xs(19, 0.25);
  std::vector<double> ys(19, 0.0);
  xs[3] = 1.5;
  xs[4] = 1.5;
  xs[11] = 1.5;
  xs[7] = -2.0;
  xs[17] = -2.0;

  const MinMax fast = cw::kernels::projection_minmax(xs.data(), ys.data(), xs.size(), 1.0, 0.0);
  MinMax slow;
  {
    ScalarGuard guard(true);
    slow = cw::kernels::projection_minmax(xs.data(), ys.data(), xs.size(), 1.0, 0.0);
  }
  CHECK(fast.maxIndex == 3);
  CHECK(fast.minIndex == 7);
  CHECK(slow.maxIndex == 3);
  CHECK(slow.minIndex == 7);
  CHECK(same_bits(fast.maxValue, 1.5));
  CHECK(same_bits(fast.minValue, -2.0));
}

TEST_CASE("minmax_indexed: random data and tie handling match the scalar path") {
  std::mt19937_64 rng(4242);
  for (std::size_t n : kSizes) {
    std::vector<double> v = random_vector(rng, n, -10.0, 10.0);
    if (n >= 8) {
      v[1] = 10.5;
      v[6] = 10.5;  // tie inside the first block
      v[2] = -10.5;
      v[n - 1] = -10.5;  // tie reaching into the tail
    }
    const MinMax fast = cw::kernels::minmax_indexed(v.data(), n);
    MinMax slow;
    {
      ScalarGuard guard(true);
      slow = cw::kernels::minmax_indexed(v.data(), n);
    }
    CAPTURE(n);
    CHECK(same_bits(fast.minValue, slow.minValue));
    CHECK(same_bits(fast.maxValue, slow.maxValue));
    CHECK(fast.minIndex == slow.minIndex);
    CHECK(fast.maxIndex == slow.maxIndex);
    if (n >= 8) {
      CHECK(fast.maxIndex == 1);
      CHECK(fast.minIndex == 2);
    }
  }
}

TEST_CASE("minmax_indexed: single element") {
  const double v = 3.25;
  const MinMax m = cw::kernels::minmax_indexed(&v, 1);
  CHECK(m.minIndex == 0);
  CHECK(m.maxIndex == 0);
  CHECK(same_bits(m.minValue, v));
  CHECK(same_bits(m.maxValue, v));
}

TEST_CASE("series_eval: dispatched backend matches scalar bit for bit") {
  // Sparse frequencies leave inactive slots that both backends must skip.
  cw::TrigSeries2 s;
  s.x.add(0, 0.0, 0.4);
  s.x.add(1, 0.5, -0.25);
  s.x.add(4, 0.0, 0.125);
  s.y.add(1, -0.5, 0.3);
  s.y.add(3, 0.0625, 0.0);
  s.y.add(7, 0.01, -0.02);
  const cw::kernels::PackedSeries packed = cw::pack_series(s);

  std::mt19937_64 rng(99);
  for (std::size_t n : kSizes) {
    const std::vector<double> u = random_vector(rng, n, 0.0, 6.28318);
    std::vector<double> su(n), cu(n);
    for (std::size_t i = 0; i < n; ++i) {
      su[i] = std::sin(u[i]);
      cu[i] = std::cos(u[i]);
    }
    std::vector<double> fx(n), fy(n), sx(n), sy(n);
    cw::kernels::series_eval(su.data(), cu.data(), n, packed, fx.data(), fy.data());
    {
      ScalarGuard guard(true);
      cw::kernels::series_eval(su.data(), cu.data(), n, packed, sx.data(), sy.data());
    }
    for (std::size_t i = 0; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(same_bits(fx[i], sx[i]));
      CHECK(same_bits(fy[i], sy[i]));
    }
    // The recurrence must also agree with the closed-form evaluation.
    for (std::size_t i = 0; i < n; ++i) {
      const cw::Vec2 ref = s.eval(u[i]);
      CHECK(std::abs(fx[i] - ref.x) < 1e-13);
      CHECK(std::abs(fy[i] - ref.y) < 1e-13);
    }
  }
}
