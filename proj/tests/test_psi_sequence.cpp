#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/psi_sequence.hpp"

using namespace widthlab;

namespace {

std::vector<PsiSequence> all_families() {
  return {PsiSequence::power(0.8),
          PsiSequence::power(2.0),
          PsiSequence::power(5.0),
          PsiSequence::exp_poly(1.0, 2.0),
          PsiSequence::exp_poly(0.5, 1.5),
          PsiSequence::exp_poly(2.0, 3.0),
          PsiSequence::exp_poly(1.0, 0.8),
          PsiSequence::geometric(0.5),
          PsiSequence::geometric(0.3),
          PsiSequence::table_with_tail({2.0, 1.0, 0.5, 0.4}, 0.5)};
}

}  // namespace

TEST_CASE("eval follows the family formulas") {
  CHECK(PsiSequence::power(2.0).eval(3) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(PsiSequence::exp_poly(1.0, 2.0).eval(2) ==
        doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(PsiSequence::geometric(0.5).eval(4) == doctest::Approx(0.0625).epsilon(1e-15));

  const auto table = PsiSequence::table_with_tail({2.0, 1.0}, 0.5);
  CHECK(table.eval(1) == 2.0);
  CHECK(table.eval(2) == 1.0);
  CHECK(table.eval(4) == doctest::Approx(0.25).epsilon(1e-15));  // 1.0 * q^(4-2)
}

TEST_CASE("index zero is rejected") {
  const auto psi = PsiSequence::power(2.0);
  CHECK_THROWS_AS((void)psi.eval(0), std::invalid_argument);
  CHECK_THROWS_AS((void)tail_sq_sum(psi, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)d0_ratio(psi, 0), std::invalid_argument);
}

TEST_CASE("constructors reject non-square-summable or malformed input") {
  CHECK_THROWS_AS(PsiSequence::power(0.4), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::power(0.5), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::exp_poly(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::exp_poly(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::geometric(1.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::geometric(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::table_with_tail({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::table_with_tail({1.0, 0.0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::table_with_tail({1.0}, 1.5), std::invalid_argument);
}

TEST_CASE("tail_sq_sum matches closed forms and brute summation") {
  const auto geo = PsiSequence::geometric(0.5);
  CHECK(tail_sq_sum(geo, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(tail_sq_sum(geo, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));

  // zeta(2) through the power family
  const auto harmonic = PsiSequence::power(1.0);
  const double pi = std::numbers::pi;
  CHECK(tail_sq_sum(harmonic, 1) == doctest::Approx(pi * pi / 6.0).epsilon(1e-12));
  CHECK(tail_sq_sum(harmonic, 1) ==
        doctest::Approx(testsupport::power_tail(2.0, 1)).epsilon(1e-12));

  // a slowly decaying power tail against the midpoint-remainder oracle
  const auto slow = PsiSequence::power(0.8);
  CHECK(tail_sq_sum(slow, 3) ==
        doctest::Approx(testsupport::power_tail(1.6, 3)).epsilon(1e-11));

  const auto ep = PsiSequence::exp_poly(1.0, 2.0);
  CHECK(tail_sq_sum(ep, 1) ==
        doctest::Approx(testsupport::exp_tail(2.0, 2.0, 1)).epsilon(1e-12));
  CHECK(tail_sq_sum(ep, 3) ==
        doctest::Approx(testsupport::exp_tail(2.0, 2.0, 3)).epsilon(1e-12));

  // sub-linear exponent exercises the dyadic-block certificate
  const auto subr = PsiSequence::exp_poly(1.0, 0.8);
  CHECK(tail_sq_sum(subr, 2) ==
        doctest::Approx(testsupport::exp_tail(2.0, 0.8, 2)).epsilon(1e-11));

  const auto table = PsiSequence::table_with_tail({2.0, 1.0}, 0.5);
  // 4 + 1 + 1^2 * (q^2/(1-q^2)) with q = 1/2
  CHECK(tail_sq_sum(table, 1) == doctest::Approx(5.0 + 1.0 / 3.0).epsilon(1e-14));
  CHECK(tail_sq_sum(table, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("head_inv_sq_sum examples") {
  const auto psi = PsiSequence::power(2.0);
  CHECK(head_inv_sq_sum(psi, 1).value == 0.0);
  CHECK(head_inv_sq_sum(PsiSequence::geometric(0.42), 1).value == 0.0);
  CHECK(head_inv_sq_sum(psi, 3).value == doctest::Approx(17.0).epsilon(1e-15));

  const auto ep = PsiSequence::exp_poly(1.0, 2.0);
  CHECK(head_inv_sq_sum(ep, 3).value ==
        doctest::Approx(std::exp(2.0) + std::exp(8.0)).epsilon(1e-14));
}

TEST_CASE("head sums stay finite in log scale far beyond double range") {
  const auto ep = PsiSequence::exp_poly(2.0, 3.0);
  const HeadSum head = head_inv_sq_sum(ep, 12);  // largest term e^(4 * 11^3)
  CHECK(std::isinf(head.value));
  CHECK(head.log == doctest::Approx(4.0 * 1331.0).epsilon(1e-12));
}

TEST_CASE("d0_ratio examples") {
  CHECK(d0_ratio(PsiSequence::exp_poly(1.0, 2.0), 2) ==
        doctest::Approx(std::exp(-5.0)).epsilon(1e-15));
  CHECK(d0_ratio(PsiSequence::geometric(0.5), 7) == 0.5);
  CHECK(d0_ratio(PsiSequence::power(2.0), 1) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("condition gauge at worked points") {
  const auto ep = PsiSequence::exp_poly(1.0, 2.0);
  const ConditionGauge g = condition_gauge(ep, 3);
  CHECK(g.head_term == doctest::Approx(0.0067462926809621982).epsilon(1e-12));
  CHECK(g.tail_term == doctest::Approx(0.00091188197249848812).epsilon(1e-12));
  CHECK(g.gauge == g.head_term);

  // Geometric q = 1/2 at n = 4: the two terms nearly tie; the tail term
  // sqrt(1/3) edges out the head term sqrt(84)/16.
  const ConditionGauge gg = condition_gauge(PsiSequence::geometric(0.5), 4);
  CHECK(gg.head_term == doctest::Approx(std::sqrt(84.0) / 16.0).epsilon(1e-12));
  CHECK(gg.tail_term == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(gg.gauge == gg.tail_term);

  for (const auto& psi : all_families()) {
    const ConditionGauge g1 = condition_gauge(psi, 1);
    CHECK(g1.head_term == 0.0);
    CHECK(g1.gauge == g1.tail_term);
  }
}

TEST_CASE("telescoping: tail(n) - tail(n+1) = psi^2(n)") {
  for (const auto& psi : all_families()) {
    for (int n = 1; n <= 32; ++n) {
      // Ratios from log values keep the comparison meaningful where the
      // linear tails underflow (steep exp-polynomial sequences).
      const double lp = 2.0 * psi.log_eval(n);
      const double r1 = std::exp(log_tail_sq_sum(psi, n) - lp);
      const double r2 = std::exp(log_tail_sq_sum(psi, n + 1) - lp);
      CHECK(r1 - r2 == doctest::Approx(1.0).epsilon(2e-12));
    }
  }
}

TEST_CASE("head recurrence is exact in summation order") {
  for (const auto& psi : all_families()) {
    if (psi.family() == PsiFamily::ExpPoly) continue;
    for (int n = 1; n <= 24; ++n) {
      const double p = psi.eval(n);
      CHECK(head_inv_sq_sum(psi, n + 1).value ==
            head_inv_sq_sum(psi, n).value + 1.0 / (p * p));
    }
  }
  // The log-scaled exp-polynomial path carries the recurrence to roundoff.
  const auto ep = PsiSequence::exp_poly(0.5, 1.5);
  for (int n = 1; n <= 24; ++n) {
    const double p2 = std::exp(2.0 * ep.log_eval(n));
    CHECK(head_inv_sq_sum(ep, n + 1).value ==
          doctest::Approx(head_inv_sq_sum(ep, n).value + 1.0 / p2).epsilon(1e-13));
  }
}

TEST_CASE("step ratios of decreasing sequences stay below one") {
  for (const auto& psi : all_families()) {
    for (int k = 1; k <= 24; ++k) CHECK(d0_ratio(psi, k) < 1.0);
  }
  // For exponent r > 1 the ratio itself decreases.
  const auto ep = PsiSequence::exp_poly(1.0, 2.0);
  for (int k = 1; k <= 24; ++k) CHECK(d0_ratio(ep, k + 1) < d0_ratio(ep, k));
}

TEST_CASE("exp-polynomial gauges decrease toward zero") {
  struct Case {
    PsiSequence psi;
    int n_hi;  // keep the linear gauge above double underflow
  };
  const Case cases[] = {{PsiSequence::exp_poly(1.0, 2.0), 12},
                        {PsiSequence::exp_poly(0.5, 1.5), 12},
                        {PsiSequence::exp_poly(2.0, 3.0), 7}};
  for (const auto& c : cases) {
    const double initial = condition_gauge(c.psi, 2).gauge;
    double prev = initial;
    for (int n = 3; n <= c.n_hi; ++n) {
      const double g = condition_gauge(c.psi, n).gauge;
      CHECK(g < prev);
      prev = g;
    }
    CHECK(prev < 0.25 * initial);
  }
}

TEST_CASE("tail sums are positive") {
  for (const auto& psi : all_families())
    for (int n : {1, 2, 5, 17}) {
      CHECK(tail_sq_sum(psi, n) >= 0.0);
      // positivity survives in log scale even where the linear value
      // underflows (steep exp-polynomial tails)
      CHECK(std::isfinite(log_tail_sq_sum(psi, n)));
    }
}
