#include "widthlab/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "widthlab/numerics.hpp"

namespace widthlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section refinement of |T| over [lo, hi] around a grid argmax.
double refine_abs_max(const TrigPolynomial& poly, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = std::fabs(poly.eval(x1));
  double f2 = std::fabs(poly.eval(x2));
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = std::fabs(poly.eval(x2));
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = std::fabs(poly.eval(x1));
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double TrigPolynomial::eval(double t) const {
  KahanAccumulator acc;
  acc.add(0.5 * a0);
  for (int k = 1; k <= degree(); ++k) {
    const Harmonic& h = coeffs[static_cast<std::size_t>(k) - 1];
    acc.add(h.a * std::cos(k * t) + h.b * std::sin(k * t));
  }
  return acc.value();
}

TrigPolynomial fourier_partial_sum(const TrigPolynomial& poly, int n) {
  if (n < 1) throw std::invalid_argument("partial sum order must be >= 1");
  TrigPolynomial out = poly;
  if (out.degree() > n - 1) out.coeffs.resize(static_cast<std::size_t>(n) - 1);
  return out;
}

SupNormResult sup_norm(const TrigPolynomial& poly, int oversample) {
  if (oversample < 8) throw std::invalid_argument("sup_norm requires oversample >= 8");
  const int m = oversample * std::max(poly.degree(), 1);
  const double h = kTwoPi / m;

  double grid_max = 0.0;
  int argmax = 0;
  for (int j = 0; j < m; ++j) {
    const double v = std::fabs(poly.eval(h * j));
    if (v > grid_max) {
      grid_max = v;
      argmax = j;
    }
  }

  const double refined = refine_abs_max(poly, h * (argmax - 1), h * (argmax + 1));
  return {std::max(grid_max, refined), grid_max};
}

double l2_norm(const TrigPolynomial& poly) {
  KahanAccumulator acc;
  acc.add(0.5 * poly.a0 * poly.a0);
  for (const Harmonic& h : poly.coeffs) acc.add(h.a * h.a + h.b * h.b);
  return std::sqrt(std::numbers::pi * acc.value());
}

}  // namespace widthlab
