#pragma once

#include <cmath>

namespace widthlab {

inline constexpr double kDefaultTol = 1e-12;

// Kahan compensated accumulator: error-free absorption of many small terms
// into a growing sum.
struct KahanAccumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace widthlab
