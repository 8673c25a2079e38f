#include "widthlab/width_bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Relative tail correction  tail_sq_sum(n+1) / psi^2(n), in linear scale.
// Computed from log differences so it survives deep underflow of either part.
double tail_correction(const PsiSequence& psi, int n, double tol) {
  return std::exp(log_tail_sq_sum(psi, n + 1, tol) - 2.0 * psi.log_eval(n));
}

// Relative head correction  2 psi^2(n) sum_{k<n} 1/psi^2(k).
double head_correction(const PsiSequence& psi, int n) {
  if (n == 1) return 0.0;
  return 2.0 * std::exp(head_inv_sq_sum(psi, n).log + 2.0 * psi.log_eval(n));
}

[[noreturn]] void fail_precondition(const char* what, double a, double b, int n) {
  std::ostringstream os;
  os << what << " (parameters " << a << ", " << b << ", n = " << n << ")";
  throw precondition_error(os.str());
}

}  // namespace

double exact_fourier_deviation(const PsiSequence& psi, int n, double tol) {
  const double leading = psi.eval(n) * kInvSqrtPi;
  return leading * std::exp(0.5 * std::log1p(tail_correction(psi, n, tol)));
}

double log_exact_fourier_deviation(const PsiSequence& psi, int n, double tol) {
  return psi.log_eval(n) + std::log(kInvSqrtPi) +
         0.5 * std::log1p(tail_correction(psi, n, tol));
}

double lower_bound(const PsiSequence& psi, int n) {
  const double leading = psi.eval(n) * kInvSqrtPi;
  if (n == 1) return leading;  // empty head sum: the bracket collapses exactly
  return leading * std::exp(-0.5 * std::log1p(head_correction(psi, n)));
}

double log_lower_bound(const PsiSequence& psi, int n) {
  return psi.log_eval(n) + std::log(kInvSqrtPi) -
         0.5 * std::log1p(head_correction(psi, n));
}

double upper_bound(const PsiSequence& psi, int n, double tol) {
  return exact_fourier_deviation(psi, n, tol);
}

double log_upper_bound(const PsiSequence& psi, int n, double tol) {
  return log_exact_fourier_deviation(psi, n, tol);
}

WidthBoundsReport bounds_report(const PsiSequence& psi, const BetaSequence& /*beta*/,
                                int n, double tol) {
  WidthBoundsReport rep;
  rep.n = n;
  rep.N_even = 2 * n;
  rep.N_odd = 2 * n - 1;
  rep.lower = lower_bound(psi, n);
  rep.leading = psi.eval(n) * kInvSqrtPi;
  rep.upper = upper_bound(psi, n, tol);
  rep.gauge = condition_gauge(psi, n, tol);
  rep.gamma_low = -std::sqrt(2.0 / std::numbers::pi) * rep.gauge.head_term;
  rep.gamma_high = kInvSqrtPi * rep.gauge.tail_term;
  return rep;
}

WeylNagyBounds weyl_nagy_report(double r, int n) {
  if (n < 1) throw std::invalid_argument("weyl_nagy_report requires n >= 1");
  if (!(r >= 0.5 * (n + 1.0)))
    fail_precondition("Weyl-Nagy bracket requires r >= (n+1)/2", r, 0.0, n);
  const double nd = n;
  const double scale = kInvSqrtPi * std::pow(nd, -r);
  // The printed 1 - x/(1+x) lower factor, evaluated as (1+x)^(-1/2) to avoid
  // cancellation for small x.
  const double head = 4.0 * std::pow(1.0 - 1.0 / nd, 2.0 * r);
  const double tail = (2.0 + 1.0 / nd) / std::pow(1.0 + 1.0 / nd, 2.0 * r);
  return {scale / std::sqrt(1.0 + head), scale * std::sqrt(1.0 + tail)};
}

double poisson_gamma(double alpha, double r, int n) {
  const double nd = n;
  const double log_m = std::max(4.0 * alpha, 2.0 - (1.0 + 1.0 / r) * std::log(alpha));
  return 1.0 + 1.0 / (alpha * r * std::pow(nd - 1.0, r - 1.0)) +
         std::exp(log_m - 2.0 * alpha * std::pow(nd - 1.0, r));
}

PoissonBounds poisson_report(double alpha, double r, int n) {
  if (n < 1) throw std::invalid_argument("poisson_report requires n >= 1");
  if (!(alpha > 0.0) || !(r > 1.0))
    fail_precondition("Poisson bracket requires alpha > 0 and r > 1", alpha, r, n);
  const double nd = n;
  if (!(std::pow(nd - 1.0, r) > 1.0 / alpha))
    fail_precondition("Poisson bracket requires (n-1)^r > 1/alpha", alpha, r, n);

  const double gamma = poisson_gamma(alpha, r, n);
  const double scale = kInvSqrtPi * std::exp(-alpha * std::pow(nd, r));

  // 2 gamma exp(-2 alpha r (n-1)^(r-1)), assembled exponent by exponent so a
  // huge gamma against a tiny exponential cannot overflow on the way.
  const double x_head = 2.0 * alpha * r * std::pow(nd - 1.0, r - 1.0);
  const double log_m = std::max(4.0 * alpha, 2.0 - (1.0 + 1.0 / r) * std::log(alpha));
  const double head =
      2.0 * std::exp(-x_head) +
      2.0 * std::exp(-x_head) / (alpha * r * std::pow(nd - 1.0, r - 1.0)) +
      2.0 * std::exp(log_m - 2.0 * alpha * std::pow(nd - 1.0, r) - x_head);

  const double x_tail = 2.0 * alpha * r * std::pow(nd, r - 1.0);
  const double tail = std::exp(-x_tail) * (1.0 + 1.0 / x_tail);

  return {scale / std::sqrt(1.0 + head), scale * std::sqrt(1.0 + tail), gamma};
}

double analytic_tail_bound(const PsiSequence& psi, int n) {
  if (n < 1) throw std::invalid_argument("analytic_tail_bound requires n >= 1");
  const double nd = n;
  switch (psi.family()) {
    case PsiFamily::Power: {
      const double r = psi.power_r();
      if (!(2.0 * r >= nd + 1.0))
        fail_precondition("power tail bound requires 2r >= n+1", r, 0.0, n);
      return std::pow(nd, -2.0 * r) * (2.0 + 1.0 / nd) /
             std::pow(1.0 + 1.0 / nd, 2.0 * r);
    }
    case PsiFamily::ExpPoly: {
      const double a = psi.alpha();
      const double r = psi.exp_r();
      if (!(r > 1.0))
        fail_precondition("exp-family tail bound requires r > 1", a, r, n);
      const double c = 2.0 * a;
      const double x = c * r * std::pow(nd, r - 1.0);
      return std::exp(-c * std::pow(nd, r) - x) * (1.0 + 1.0 / x);
    }
    case PsiFamily::Geometric: {
      const double Q = psi.ratio_q() * psi.ratio_q();
      return std::pow(Q, nd + 1.0) / (1.0 - Q);
    }
    case PsiFamily::TableWithTail:
      return tail_sq_sum(psi, n + 1, kDefaultTol);
  }
  return 0.0;  // unreachable
}

double analytic_head_bound(const PsiSequence& psi, int n) {
  if (n < 2) throw std::invalid_argument("analytic_head_bound requires n >= 2");
  const double nd = n;
  switch (psi.family()) {
    case PsiFamily::Power: {
      const double r = psi.power_r();
      if (!(r >= 0.5 * (nd + 1.0)))
        fail_precondition("power head bound requires r >= (n+1)/2", r, 0.0, n);
      return std::pow(nd, 2.0 * r) * (1.0 + 4.0 * std::pow(1.0 - 1.0 / nd, 2.0 * r));
    }
    case PsiFamily::ExpPoly: {
      const double a = psi.alpha();
      const double r = psi.exp_r();
      if (!(r > 1.0))
        fail_precondition("exp-family head bound requires r > 1", a, r, n);
      if (!(std::pow(nd - 1.0, r) > 1.0 / a))
        fail_precondition("exp-family head bound requires (n-1)^r > 1/alpha", a, r, n);
      return poisson_gamma(a, r, n) *
             std::exp(-2.0 * a * r * std::pow(nd - 1.0, r - 1.0));
    }
    default:
      throw precondition_error("analytic head bound exists only for power and "
                               "exp-polynomial families");
  }
}

double exp_integral_bound(double alpha, double r, int n) {
  if (!(alpha > 0.0) || !(r > 1.0))
    fail_precondition("integral bound requires alpha > 0 and r > 1", alpha, r, n);
  if (n < 2) throw std::invalid_argument("exp_integral_bound requires n >= 2");
  const double nd = n;
  if (n >= 3 && !(std::pow(nd - 1.0, r) > 1.0 / alpha))
    fail_precondition("integral bound requires (n-1)^r > 1/alpha", alpha, r, n);
  const double head = std::exp(2.0 * alpha * std::pow(nd - 1.0, r)) /
                      (alpha * r * std::pow(nd - 1.0, r - 1.0));
  const double m = std::max(std::exp(4.0 * alpha),
                            std::exp(2.0) / std::pow(alpha, 1.0 + 1.0 / r));
  return head + m;
}

}  // namespace widthlab
