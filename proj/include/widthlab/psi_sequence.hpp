#pragma once

// Admissible coefficient sequences psi(k), k >= 1, and the head/tail sums
// every width formula consumes.
//
// Four parametric families, all strictly positive and square summable:
//   Power(r)          psi(k) = k^-r,            r > 1/2
//   ExpPoly(alpha,r)  psi(k) = exp(-alpha k^r),  alpha > 0, r > 0
//   Geometric(q)      psi(k) = q^k,              0 < q < 1
//   TableWithTail     explicit positive head, geometric continuation
//
// Arbitrary callables are rejected by construction: the sums below carry
// truncation certificates, and certificates need analytic decay.

#include <cstdint>
#include <vector>

#include "widthlab/numerics.hpp"

namespace widthlab {

enum class PsiFamily { Power, ExpPoly, Geometric, TableWithTail };

class PsiSequence {
 public:
  static PsiSequence power(double r);
  static PsiSequence exp_poly(double alpha, double r);
  static PsiSequence geometric(double q);
  static PsiSequence table_with_tail(std::vector<double> values, double tail_q);

  PsiFamily family() const { return family_; }

  // psi(k).  Sequences are indexed from 1; k = 0 is rejected.
  double eval(int k) const;
  // log psi(k), computed from the family shape (no exp/log round trip).
  double log_eval(int k) const;

  // Sum psi(k) < infinity, required for pointwise kernel evaluation.
  bool pointwise_summable() const;

  // Family parameters (valid only for the matching family).
  double power_r() const { return r_; }
  double alpha() const { return alpha_; }
  double exp_r() const { return r_; }
  double ratio_q() const { return q_; }
  const std::vector<double>& table_values() const { return table_; }
  double table_q() const { return q_; }

 private:
  PsiSequence() = default;

  PsiFamily family_ = PsiFamily::Power;
  double r_ = 0.0;      // Power / ExpPoly exponent
  double alpha_ = 0.0;  // ExpPoly rate
  double q_ = 0.0;      // Geometric / table tail ratio
  std::vector<double> table_;
};

// Sum_{k=1}^{n-1} 1/psi^2(k), kept in log scale with the linear value
// alongside when it is representable.  Empty sum (n = 1) has log = -inf,
// value = 0.
struct HeadSum {
  double log;
  double value;
};

// The two terms of the remainder gauge:
//   head_term = psi(n) (Sum_{k<n} 1/psi^2(k))^(1/2)
//   tail_term = (1/psi(n)) (Sum_{k>n} psi^2(k))^(1/2)
struct ConditionGauge {
  int n;
  double head_term;
  double tail_term;
  double gauge;  // max of the two
};

// Sum_{k=n}^inf psi^2(k) to relative accuracy tol.  Summation is compensated;
// truncation happens only once the family's tail certificate bounds the
// neglected remainder below tol times the accumulated sum.
double tail_sq_sum(const PsiSequence& psi, int n, double tol = kDefaultTol);

// log of tail_sq_sum; stays finite where the linear value underflows.
double log_tail_sq_sum(const PsiSequence& psi, int n, double tol = kDefaultTol);

HeadSum head_inv_sq_sum(const PsiSequence& psi, int n);

// psi(k+1)/psi(k).
double d0_ratio(const PsiSequence& psi, int k);

ConditionGauge condition_gauge(const PsiSequence& psi, int n, double tol = kDefaultTol);

// Certified upper bound on Sum_{k=m}^inf psi^2(k) (internal machinery, also
// used to pick kernel truncation degrees).
double certified_tail_sq_bound(const PsiSequence& psi, int m);

// log of certified_tail_sq_bound; finite where the linear bound underflows.
double log_certified_tail_sq_bound(const PsiSequence& psi, int m);

// Certified upper bound on Sum_{k=m}^inf psi(k); +inf when the family is not
// absolutely summable (Power with r <= 1).
double certified_abs_tail_bound(const PsiSequence& psi, int m);

}  // namespace widthlab
