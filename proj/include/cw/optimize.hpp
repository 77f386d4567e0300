#pragma once

#include <utility>

namespace cw {

// Golden-section search for a maximum of f on [a, b], assuming unimodality
// over the bracket. Returns the abscissa once the bracket is below tol.
template <class F>
double golden_max(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double golden_min(F&& f, double a, double b, double tol) {
  return golden_max([&f](double x) { return -f(x); }, a, b, tol);
}

// Bisection for a root of f on [a, b]; f(a) and f(b) must have opposite
// signs (either may be zero). Returns the midpoint of the final bracket.
template <class F>
double bisect_root(F&& f, double a, double b, double tol) {
  double fa = f(a);
  if (fa == 0.0) return a;
  double fb = f(b);
  if (fb == 0.0) return b;
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace cw
