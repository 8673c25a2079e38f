#pragma once

// Kernels with Fourier series
//
//   Psi(t) = sum_{k>=1} psi(k) cos(kt - beta_k pi/2)
//
// together with the convolution transform they generate and its coefficient-
// wise inverse.  Power sequences with constant phase give the Weyl-Nagy
// kernels, exp-polynomial sequences the generalized Poisson kernels.

#include "widthlab/beta_sequence.hpp"
#include "widthlab/numerics.hpp"
#include "widthlab/psi_sequence.hpp"
#include "widthlab/trig_polynomial.hpp"

namespace widthlab {

struct KernelSpec {
  PsiSequence psi;
  BetaSequence beta;
};

// (cos(beta pi/2), sin(beta pi/2)), reduced mod 4 beforehand so integer
// quarter turns come out exact and the phase is 4-periodic bitwise.
Harmonic beta_phase(double beta);

// Fourier pair of harmonic k: a = psi(k) cos(beta_k pi/2),
// b = psi(k) sin(beta_k pi/2).
Harmonic kernel_coefficients(const KernelSpec& spec, int k);

// Pointwise kernel value with the truncation remainder certified below tol
// (absolute).  Requires absolute summability: Power needs r > 1.
double eval_kernel(const KernelSpec& spec, double t, double tol);

// L2 norm of the remainder kernel sum_{k>=n}: sqrt(pi * tail_sq_sum(n)).
// Independent of the phase sequence.
double remainder_kernel_l2(const KernelSpec& spec, int n, double tol = kDefaultTol);

// Convolution transform: harmonic k gains factor psi(k) and phase shift
// -beta_k pi/2.  The a0 of phi is carried through unchanged.
TrigPolynomial psi_integral(const TrigPolynomial& phi, const KernelSpec& spec);

// Coefficient-wise inverse of psi_integral on harmonics k >= 1; output a0 = 0.
TrigPolynomial psi_derivative(const TrigPolynomial& poly, const KernelSpec& spec);

// Smallest degree K >= n with certified
//   Sum_{k>K} psi^2(k) <= ratio * Sum_{k>=n} psi^2(k).
int kernel_truncation_degree(const PsiSequence& psi, int n, double ratio,
                             double tol = kDefaultTol);

}  // namespace widthlab
