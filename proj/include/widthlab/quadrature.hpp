#pragma once

#include <cmath>
#include <numbers>

#include "widthlab/numerics.hpp"

namespace widthlab {

namespace detail {

inline double simpson_step(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_step(a, m, fa, flm, fm);
  const double right = simpson_step(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth > 50 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = detail::simpson_step(a, b, fa, fm, fb);
  return detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 0);
}

// Trapezoid rule for 2pi-periodic integrands over [-pi, pi) with m uniform
// nodes; exact for trigonometric polynomials of degree below m.
template <class F>
double trapezoid_periodic(F&& f, int m) {
  KahanAccumulator acc;
  const double h = 2.0 * std::numbers::pi / m;
  for (int j = 0; j < m; ++j) acc.add(f(-std::numbers::pi + h * j));
  return acc.value() * h;
}

}  // namespace widthlab
