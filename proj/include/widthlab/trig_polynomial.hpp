#pragma once

// Finite trigonometric polynomials
//
//   T(x) = a0/2 + sum_{k=1}^{n} (a_k cos kx + b_k sin kx)
//
// and the handful of operations the width machinery needs: truncation to a
// partial Fourier sum, the exact L2 norm, and a refined uniform-norm estimate
// with a certified lower bound.

#include <vector>

namespace widthlab {

struct Harmonic {
  double a = 0.0;
  double b = 0.0;
};

struct TrigPolynomial {
  double a0 = 0.0;                // constant term is a0/2
  std::vector<Harmonic> coeffs;   // harmonic k lives at coeffs[k-1]

  int degree() const { return static_cast<int>(coeffs.size()); }

  Harmonic harmonic(int k) const {
    if (k < 1 || k > degree()) return {};
    return coeffs[static_cast<std::size_t>(k) - 1];
  }

  double eval(double t) const;
};

// Retains a0 and harmonics 1..n-1, drops the rest.
TrigPolynomial fourier_partial_sum(const TrigPolynomial& poly, int n);

struct SupNormResult {
  double value;            // grid maximum refined by golden-section search
  double certified_lower;  // raw grid maximum; never exceeds the true norm
};

// max_t |T(t)| estimated on a uniform grid of oversample * max(degree, 1)
// points, then refined around the first-index argmax.
SupNormResult sup_norm(const TrigPolynomial& poly, int oversample = 32);

// Parseval: ||T||_2 = sqrt(pi (a0^2/2 + sum (a_k^2 + b_k^2))).
double l2_norm(const TrigPolynomial& poly);

}  // namespace widthlab
