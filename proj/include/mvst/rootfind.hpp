#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mvst/errors.hpp"

namespace mvst {

// Bracketed bisection/secant hybrid. Takes a secant step when it lands
// strictly inside the current bracket and shrinks it, otherwise bisects;
// convergence is guaranteed by the bracket.
template <class F>
double find_root_bracketed(F f, double lo, double hi,
                           double rel_tol = 1e-12) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NumericalError("find_root_bracketed: no sign change on [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  for (int iter = 0; iter < 200; ++iter) {
    double mid;
    const double denom = fhi - flo;
    if (denom != 0.0) {
      mid = hi - fhi * (hi - lo) / denom;  // secant
      const double margin = 0.01 * (hi - lo);
      if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
    } else {
      mid = 0.5 * (lo + hi);
    }
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)))
      return 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimization of a unimodal function on [lo, hi], followed
// by one parabolic refinement. Pure golden section stalls at sqrt(eps)
// relative accuracy because function values become indistinguishable near a
// flat minimum; a three-point quadratic fit on a wider stencil recovers a
// couple more digits.
template <class F>
double golden_section_minimize(F f, double lo, double hi,
                               double rel_tol = 1e-10) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > rel_tol * std::max(std::abs(a), std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  const double h = 1e-5 * std::max(std::abs(x), 1e-300);
  const double fm = f(x - h), f0 = f(x), fp = f(x + h);
  const double denom = fm - 2.0 * f0 + fp;
  if (denom > 0.0) {
    const double shift = 0.5 * h * (fm - fp) / denom;
    if (std::abs(shift) <= h) x += shift;
  }
  return x;
}

}  // namespace mvst
