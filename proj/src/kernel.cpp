#include "widthlab/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

constexpr std::int64_t kEvalTermCap = 1 << 25;

}  // namespace

Harmonic beta_phase(double beta) {
  double b = std::fmod(beta, 4.0);
  if (b < 0.0) b += 4.0;
  if (b == 0.0) return {1.0, 0.0};
  if (b == 1.0) return {0.0, 1.0};
  if (b == 2.0) return {-1.0, 0.0};
  if (b == 3.0) return {0.0, -1.0};
  const double half_pi = 0.5 * std::numbers::pi;
  return {std::cos(b * half_pi), std::sin(b * half_pi)};
}

Harmonic kernel_coefficients(const KernelSpec& spec, int k) {
  const Harmonic phase = beta_phase(spec.beta.at(k));
  const double p = spec.psi.eval(k);
  return {p * phase.a, p * phase.b};
}

double eval_kernel(const KernelSpec& spec, double t, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_kernel requires tol > 0");
  if (!spec.psi.pointwise_summable())
    throw precondition_error(
        "pointwise kernel evaluation needs an absolutely summable psi "
        "(power family requires r > 1)");

  // Pick the truncation degree from the certificate before summing anything,
  // so an unreachable tolerance fails fast instead of after the cap.
  auto ok = [&](std::int64_t k) {
    return certified_abs_tail_bound(spec.psi, static_cast<int>(k) + 1) <= tol;
  };
  std::int64_t hi = 1;
  while (!ok(hi)) {
    if (hi >= kEvalTermCap)
      throw precondition_error(
          "kernel truncation not certifiable at this tolerance within the "
          "term cap; loosen --tol for slowly decaying kernels");
    hi += hi / 2 + 1;
  }
  std::int64_t lo = 1;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  const std::int64_t K = hi;

  KahanAccumulator acc;
  for (std::int64_t k = 1; k <= K; ++k) {
    const Harmonic h = kernel_coefficients(spec, static_cast<int>(k));
    acc.add(h.a * std::cos(k * t) + h.b * std::sin(k * t));
  }
  return acc.value();
}

double remainder_kernel_l2(const KernelSpec& spec, int n, double tol) {
  return std::sqrt(std::numbers::pi * tail_sq_sum(spec.psi, n, tol));
}

TrigPolynomial psi_integral(const TrigPolynomial& phi, const KernelSpec& spec) {
  TrigPolynomial out;
  out.a0 = phi.a0;
  out.coeffs.resize(phi.coeffs.size());
  for (int k = 1; k <= phi.degree(); ++k) {
    const Harmonic in = phi.coeffs[static_cast<std::size_t>(k) - 1];
    const Harmonic ph = beta_phase(spec.beta.at(k));
    const double p = spec.psi.eval(k);
    out.coeffs[static_cast<std::size_t>(k) - 1] = {p * (in.a * ph.a - in.b * ph.b),
                                                   p * (in.a * ph.b + in.b * ph.a)};
  }
  return out;
}

TrigPolynomial psi_derivative(const TrigPolynomial& poly, const KernelSpec& spec) {
  TrigPolynomial out;
  out.a0 = 0.0;
  out.coeffs.resize(poly.coeffs.size());
  for (int k = 1; k <= poly.degree(); ++k) {
    const Harmonic in = poly.coeffs[static_cast<std::size_t>(k) - 1];
    const Harmonic ph = beta_phase(spec.beta.at(k));
    const double p = spec.psi.eval(k);
    out.coeffs[static_cast<std::size_t>(k) - 1] = {(in.a * ph.a + in.b * ph.b) / p,
                                                   (-in.a * ph.b + in.b * ph.a) / p};
  }
  return out;
}

int kernel_truncation_degree(const PsiSequence& psi, int n, double ratio, double tol) {
  if (!(ratio > 0.0)) throw std::invalid_argument("truncation ratio must be positive");
  // Compared in log scale so slow decay and deep underflow both behave.
  const double log_target = std::log(ratio) + log_tail_sq_sum(psi, n, tol);

  auto ok = [&](int k) { return log_certified_tail_sq_bound(psi, k + 1) <= log_target; };

  int hi = std::max(n, 4);
  while (!ok(hi)) {
    if (hi > (1 << 22))
      throw precondition_error("kernel truncation degree exceeds the term cap");
    hi += hi / 2 + 1;
  }
  int lo = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

}  // namespace widthlab
