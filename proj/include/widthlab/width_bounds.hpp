#pragma once

// Two-sided width estimates for convolution classes with square-summable
// kernel coefficients, in the uniform norm.  For every n the same pair of
// numbers brackets the Bernstein, Kolmogorov, linear and projection widths
// of orders 2n and 2n-1:
//
//   lower = (1/sqrt(pi)) (1/psi^2(n) + 2 sum_{k<n} 1/psi^2(k))^(-1/2)
//   upper = (1/sqrt(pi)) (sum_{k>=n} psi^2(k))^(1/2)
//
// The upper bound is attained by the partial Fourier sum S_{n-1}, i.e. it is
// the exact uniform deviation of the class from its Fourier sums.  Around the
// shared leading term psi(n)/sqrt(pi), the O(1) remainder coefficient lies in
// [-sqrt(2/pi) * head_term, (1/sqrt(pi)) * tail_term] in the gauge's terms.
//
// Specialized relaxations: Weyl-Nagy (psi(k) = k^-r) and generalized Poisson
// (psi(k) = exp(-alpha k^r)) closed forms, plus the auxiliary head/tail/
// integral inequalities they rest on.

#include "widthlab/beta_sequence.hpp"
#include "widthlab/psi_sequence.hpp"

namespace widthlab {

struct WidthBoundsReport {
  int n;
  int N_even;   // 2n
  int N_odd;    // 2n - 1
  double lower;
  double leading;  // psi(n)/sqrt(pi)
  double upper;    // exact Fourier deviation
  ConditionGauge gauge;
  double gamma_low;   // -sqrt(2/pi) * gauge.head_term
  double gamma_high;  // (1/sqrt(pi)) * gauge.tail_term
};

// Exact uniform deviation realized by S_{n-1}; independent of the phases.
double exact_fourier_deviation(const PsiSequence& psi, int n, double tol = kDefaultTol);
double log_exact_fourier_deviation(const PsiSequence& psi, int n, double tol = kDefaultTol);

double lower_bound(const PsiSequence& psi, int n);
double log_lower_bound(const PsiSequence& psi, int n);

// Identical to exact_fourier_deviation (the Fourier projector attains it).
double upper_bound(const PsiSequence& psi, int n, double tol = kDefaultTol);
double log_upper_bound(const PsiSequence& psi, int n, double tol = kDefaultTol);

// Full per-n record.  The phase sequence never enters the values; it is
// accepted so call sites mirror the class specification.
WidthBoundsReport bounds_report(const PsiSequence& psi, const BetaSequence& beta, int n,
                                double tol = kDefaultTol);

struct WeylNagyBounds {
  double lower;
  double upper;
};

// Closed-form bracket for psi(k) = k^-r; requires r >= (n+1)/2.
WeylNagyBounds weyl_nagy_report(double r, int n);

struct PoissonBounds {
  double lower;
  double upper;
  double gamma;
};

// Closed-form bracket for psi(k) = exp(-alpha k^r); requires alpha > 0,
// r > 1 and (n-1)^r > 1/alpha (strict).
PoissonBounds poisson_report(double alpha, double r, int n);

// Certified upper bound on tail_sq_sum(psi, n+1) from the family's closed
// forms: power needs 2r >= n+1, exp-polynomial needs r > 1.
double analytic_tail_bound(const PsiSequence& psi, int n);

// Power (r >= (n+1)/2, n >= 2): bound on n^{2r} + 2 sum_{k<n} k^{2r}.
// ExpPoly (r > 1, (n-1)^r > 1/alpha, n >= 2): bound on
// psi^2(n) * head_inv_sq_sum(n).
double analytic_head_bound(const PsiSequence& psi, int n);

// Bound on int_1^{n-1} exp(2 alpha t^r) dt.  n = 2 is the empty interval and
// trivially satisfied; n >= 3 additionally requires (n-1)^r > 1/alpha.
double exp_integral_bound(double alpha, double r, int n);

// gamma_{alpha,r,n} of the Poisson bracket.
double poisson_gamma(double alpha, double r, int n);

}  // namespace widthlab
