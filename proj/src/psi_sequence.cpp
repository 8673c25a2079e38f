#include "widthlab/psi_sequence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kTermCap = 1 << 24;

void check_index(int k) {
  if (k < 1) throw std::invalid_argument("psi sequences are indexed from 1");
}

// --- tail machinery for exp(-c k^r) sums ------------------------------------

// Certified upper bound on Sum_{k=m}^inf exp(-c (k^r - shift_r)), c > 0,
// r > 0, valid whenever m^r >= shift_r.
//
// r >= 1: increments of k^r grow, so the term ratio from m on is at most
// exp(-c ((m+1)^r - m^r)) and a geometric majorant applies.
// r < 1: block the range dyadically; each block [L, 2L) holds L terms, none
// larger than exp(-c (L^r - shift_r)).
double exp_tail_bound_scaled(double c, double r, double m, double shift_r) {
  if (r >= 1.0) {
    const double t0 = std::exp(-c * (std::pow(m, r) - shift_r));
    const double delta = c * (std::pow(m + 1.0, r) - std::pow(m, r));
    const double rho = std::exp(-delta);
    return t0 / (1.0 - rho);
  }
  KahanAccumulator acc;
  double len = m;
  for (int j = 0; j < 4096; ++j) {
    const double block = len * std::exp(-c * (std::pow(len, r) - shift_r));
    acc.add(block);
    if (block < 1e-300) break;
    len *= 2.0;
  }
  return acc.value();
}

double exp_tail_bound(double c, double r, double m) {
  return exp_tail_bound_scaled(c, r, m, 0.0);
}

// Sum_{k=m}^inf exp(-c (k^r - shift_r)), compensated, with a certified stop:
// terminates once the scaled remainder bound drops below tol * partial.
// The true sum is exp(-c * shift_r) times the result.
double exp_scaled_sum(double c, double r, std::int64_t m, double shift_r, double tol) {
  KahanAccumulator acc;
  for (std::int64_t k = m;; ++k) {
    const double kd = static_cast<double>(k);
    acc.add(std::exp(-c * (std::pow(kd, r) - shift_r)));
    const double rem = exp_tail_bound_scaled(c, r, kd + 1.0, shift_r);
    if (rem <= tol * acc.value()) break;
    if (k - m > kTermCap)
      throw precondition_error("exp-family tail failed to certify within the term cap");
  }
  return acc.value();
}

// --- tail machinery for power sums ------------------------------------------

// Euler-Maclaurin remainder for Sum_{k=K+1}^inf k^-s after direct summation
// through K.  The expansion alternates with terms shrinking at desk scale, so
// the value below overshoots the truth by less than em_power_error(s, K).
double em_power_remainder(double s, double K) {
  return std::pow(K, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(K, -s) +
         (s / 12.0) * std::pow(K, -s - 1.0) -
         (s * (s + 1.0) * (s + 2.0) / 720.0) * std::pow(K, -s - 3.0);
}

double em_power_error(double s, double K) {
  return (s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0) *
         std::pow(K, -s - 5.0);
}

// Sum_{k=n}^inf k^-s, s > 1: direct compensated summation to a cutoff, then
// the Euler-Maclaurin remainder, whose own error must certify below
// tol * sum.
double power_tail_sum(double s, std::int64_t n, double tol) {
  std::int64_t cutoff = std::max<std::int64_t>(10 * n, 10'000);
  for (;;) {
    KahanAccumulator acc;
    for (std::int64_t k = n; k <= cutoff; ++k)
      acc.add(std::pow(static_cast<double>(k), -s));
    const double K = static_cast<double>(cutoff);
    const double total = acc.value() + em_power_remainder(s, K);
    if (em_power_error(s, K) <= tol * total) return total;
    cutoff *= 4;
    if (cutoff > kTermCap)
      throw precondition_error("power-family tail failed to certify within the term cap");
  }
}

// Certified upper bound on Sum_{k=m}^inf k^-s, s > 1.
double power_tail_bound(double s, double m) {
  if (m <= 1.0) return 1.0 + power_tail_bound(s, 2.0);
  const double K = m - 1.0;
  // Alternating expansion truncated after a positive term: upper bound.
  return std::pow(K, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(K, -s) +
         (s / 12.0) * std::pow(K, -s - 1.0);
}

}  // namespace

// --- construction ------------------------------------------------------------

PsiSequence PsiSequence::power(double r) {
  if (!(r > 0.5))
    throw std::invalid_argument("power family requires r > 1/2 for square summability");
  PsiSequence psi;
  psi.family_ = PsiFamily::Power;
  psi.r_ = r;
  return psi;
}

PsiSequence PsiSequence::exp_poly(double alpha, double r) {
  if (!(alpha > 0.0)) throw std::invalid_argument("exp_poly family requires alpha > 0");
  if (!(r > 0.0)) throw std::invalid_argument("exp_poly family requires r > 0");
  PsiSequence psi;
  psi.family_ = PsiFamily::ExpPoly;
  psi.alpha_ = alpha;
  psi.r_ = r;
  return psi;
}

PsiSequence PsiSequence::geometric(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("geometric family requires q in (0,1)");
  PsiSequence psi;
  psi.family_ = PsiFamily::Geometric;
  psi.q_ = q;
  return psi;
}

PsiSequence PsiSequence::table_with_tail(std::vector<double> values, double tail_q) {
  if (values.empty()) throw std::invalid_argument("table family requires a nonempty head");
  for (double v : values)
    if (!(v > 0.0)) throw std::invalid_argument("table values must be strictly positive");
  if (!(tail_q > 0.0 && tail_q < 1.0))
    throw std::invalid_argument("table tail ratio must lie in (0,1)");
  PsiSequence psi;
  psi.family_ = PsiFamily::TableWithTail;
  psi.table_ = std::move(values);
  psi.q_ = tail_q;
  return psi;
}

// --- evaluation ---------------------------------------------------------------

double PsiSequence::eval(int k) const {
  check_index(k);
  const double kd = k;
  switch (family_) {
    case PsiFamily::Power:
      return std::pow(kd, -r_);
    case PsiFamily::ExpPoly:
      return std::exp(-alpha_ * std::pow(kd, r_));
    case PsiFamily::Geometric:
      return std::pow(q_, kd);
    case PsiFamily::TableWithTail: {
      const auto len = static_cast<int>(table_.size());
      if (k <= len) return table_[static_cast<std::size_t>(k) - 1];
      return table_.back() * std::pow(q_, static_cast<double>(k - len));
    }
  }
  return 0.0;  // unreachable
}

double PsiSequence::log_eval(int k) const {
  check_index(k);
  const double kd = k;
  switch (family_) {
    case PsiFamily::Power:
      return -r_ * std::log(kd);
    case PsiFamily::ExpPoly:
      return -alpha_ * std::pow(kd, r_);
    case PsiFamily::Geometric:
      return kd * std::log(q_);
    case PsiFamily::TableWithTail: {
      const auto len = static_cast<int>(table_.size());
      if (k <= len) return std::log(table_[static_cast<std::size_t>(k) - 1]);
      return std::log(table_.back()) + static_cast<double>(k - len) * std::log(q_);
    }
  }
  return -kInf;  // unreachable
}

bool PsiSequence::pointwise_summable() const {
  return family_ != PsiFamily::Power || r_ > 1.0;
}

// --- sums ----------------------------------------------------------------------

double tail_sq_sum(const PsiSequence& psi, int n, double tol) {
  check_index(n);
  if (!(tol > 0.0)) throw std::invalid_argument("tail_sq_sum requires tol > 0");
  switch (psi.family()) {
    case PsiFamily::Power:
      return power_tail_sum(2.0 * psi.power_r(), n, tol);
    case PsiFamily::ExpPoly: {
      const double c = 2.0 * psi.alpha();
      const double shift = std::pow(static_cast<double>(n), psi.exp_r());
      return std::exp(-c * shift) * exp_scaled_sum(c, psi.exp_r(), n, shift, tol);
    }
    case PsiFamily::Geometric: {
      const double Q = psi.ratio_q() * psi.ratio_q();
      return std::pow(Q, static_cast<double>(n)) / (1.0 - Q);
    }
    case PsiFamily::TableWithTail: {
      const auto& tab = psi.table_values();
      const auto len = static_cast<int>(tab.size());
      const double Q = psi.table_q() * psi.table_q();
      KahanAccumulator acc;
      for (int k = n; k <= len; ++k) acc.add(tab[static_cast<std::size_t>(k) - 1] *
                                             tab[static_cast<std::size_t>(k) - 1]);
      const int m = std::max(n, len + 1);
      const double last = tab.back();
      acc.add(last * last * std::pow(Q, static_cast<double>(m - len)) / (1.0 - Q));
      return acc.value();
    }
  }
  return 0.0;  // unreachable
}

double log_tail_sq_sum(const PsiSequence& psi, int n, double tol) {
  check_index(n);
  switch (psi.family()) {
    case PsiFamily::ExpPoly: {
      const double c = 2.0 * psi.alpha();
      const double shift = std::pow(static_cast<double>(n), psi.exp_r());
      return -c * shift + std::log(exp_scaled_sum(c, psi.exp_r(), n, shift, tol));
    }
    case PsiFamily::Geometric: {
      const double Q = psi.ratio_q() * psi.ratio_q();
      return static_cast<double>(n) * std::log(Q) - std::log1p(-Q);
    }
    default:
      return std::log(tail_sq_sum(psi, n, tol));
  }
}

HeadSum head_inv_sq_sum(const PsiSequence& psi, int n) {
  check_index(n);
  if (n == 1) return {-kInf, 0.0};
  if (psi.family() == PsiFamily::ExpPoly) {
    // Scale by the largest term, exp(2 alpha (n-1)^r), so nothing overflows.
    const double c = 2.0 * psi.alpha();
    const double r = psi.exp_r();
    const double top = std::pow(static_cast<double>(n) - 1.0, r);
    KahanAccumulator acc;
    for (int k = 1; k <= n - 1; ++k)
      acc.add(std::exp(c * (std::pow(static_cast<double>(k), r) - top)));
    const double lg = c * top + std::log(acc.value());
    return {lg, std::exp(lg)};
  }
  // Plain ascending summation: head(n+1) extends head(n) term by term, so the
  // recurrence head(n+1) = head(n) + 1/psi^2(n) holds bitwise.
  double sum = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    const double p = psi.eval(k);
    sum += 1.0 / (p * p);
  }
  return {std::log(sum), sum};
}

double d0_ratio(const PsiSequence& psi, int k) {
  check_index(k);
  const double kd = k;
  switch (psi.family()) {
    case PsiFamily::Power:
      return std::pow(kd / (kd + 1.0), psi.power_r());
    case PsiFamily::ExpPoly:
      return std::exp(-psi.alpha() *
                      (std::pow(kd + 1.0, psi.exp_r()) - std::pow(kd, psi.exp_r())));
    case PsiFamily::Geometric:
      return psi.ratio_q();
    case PsiFamily::TableWithTail:
      return psi.eval(k + 1) / psi.eval(k);
  }
  return 0.0;  // unreachable
}

ConditionGauge condition_gauge(const PsiSequence& psi, int n, double tol) {
  check_index(n);
  const double log_psi_n = psi.log_eval(n);
  const HeadSum head = head_inv_sq_sum(psi, n);
  const double head_term = n == 1 ? 0.0 : std::exp(log_psi_n + 0.5 * head.log);
  const double tail_term = std::exp(0.5 * log_tail_sq_sum(psi, n + 1, tol) - log_psi_n);
  return {n, head_term, tail_term, std::max(head_term, tail_term)};
}

// --- certificates ---------------------------------------------------------------

double certified_tail_sq_bound(const PsiSequence& psi, int m) {
  check_index(m);
  const double md = m;
  switch (psi.family()) {
    case PsiFamily::Power:
      return power_tail_bound(2.0 * psi.power_r(), md);
    case PsiFamily::ExpPoly:
      return exp_tail_bound(2.0 * psi.alpha(), psi.exp_r(), md);
    case PsiFamily::Geometric: {
      const double Q = psi.ratio_q() * psi.ratio_q();
      return std::pow(Q, md) / (1.0 - Q);
    }
    case PsiFamily::TableWithTail:
      return tail_sq_sum(psi, m, kDefaultTol);
  }
  return 0.0;  // unreachable
}

double log_certified_tail_sq_bound(const PsiSequence& psi, int m) {
  check_index(m);
  const double md = m;
  switch (psi.family()) {
    case PsiFamily::ExpPoly: {
      const double c = 2.0 * psi.alpha();
      const double r = psi.exp_r();
      const double shift = std::pow(md, r);
      return -c * shift + std::log(exp_tail_bound_scaled(c, r, md, shift));
    }
    case PsiFamily::Geometric: {
      const double Q = psi.ratio_q() * psi.ratio_q();
      return md * std::log(Q) - std::log1p(-Q);
    }
    default:
      return std::log(certified_tail_sq_bound(psi, m));
  }
}

double certified_abs_tail_bound(const PsiSequence& psi, int m) {
  check_index(m);
  const double md = m;
  switch (psi.family()) {
    case PsiFamily::Power:
      if (!(psi.power_r() > 1.0)) return kInf;
      return power_tail_bound(psi.power_r(), md);
    case PsiFamily::ExpPoly:
      return exp_tail_bound(psi.alpha(), psi.exp_r(), md);
    case PsiFamily::Geometric:
      return std::pow(psi.ratio_q(), md) / (1.0 - psi.ratio_q());
    case PsiFamily::TableWithTail: {
      const auto& tab = psi.table_values();
      const auto len = static_cast<int>(tab.size());
      KahanAccumulator acc;
      for (int k = m; k <= len; ++k) acc.add(tab[static_cast<std::size_t>(k) - 1]);
      const int first = std::max(m, len + 1);
      acc.add(tab.back() * std::pow(psi.table_q(), static_cast<double>(first - len)) /
              (1.0 - psi.table_q()));
      return acc.value();
    }
  }
  return 0.0;  // unreachable
}

}  // namespace widthlab
