#pragma once

#include <stdexcept>
#include <vector>

namespace widthlab {

// Phase sequence beta_k, k >= 1: a single constant, an explicit list with a
// default beyond its end, or a periodic pattern.
class BetaSequence {
 public:
  enum class Mode { Constant, List, Periodic };

  static BetaSequence constant(double beta) {
    BetaSequence b;
    b.mode_ = Mode::Constant;
    b.default_ = beta;
    return b;
  }

  static BetaSequence list(std::vector<double> values, double default_value) {
    BetaSequence b;
    b.mode_ = Mode::List;
    b.values_ = std::move(values);
    b.default_ = default_value;
    return b;
  }

  static BetaSequence periodic(std::vector<double> values) {
    if (values.empty())
      throw std::invalid_argument("periodic beta sequence requires a nonempty pattern");
    BetaSequence b;
    b.mode_ = Mode::Periodic;
    b.values_ = std::move(values);
    return b;
  }

  Mode mode() const { return mode_; }

  double at(int k) const {
    if (k < 1) throw std::invalid_argument("beta sequences are indexed from 1");
    switch (mode_) {
      case Mode::Constant:
        return default_;
      case Mode::List:
        return k <= static_cast<int>(values_.size())
                   ? values_[static_cast<std::size_t>(k) - 1]
                   : default_;
      case Mode::Periodic:
        return values_[static_cast<std::size_t>((k - 1) % static_cast<int>(values_.size()))];
    }
    return 0.0;  // unreachable
  }

  double default_value() const { return default_; }
  const std::vector<double>& values() const { return values_; }

 private:
  BetaSequence() = default;

  Mode mode_ = Mode::Constant;
  double default_ = 0.0;
  std::vector<double> values_;
};

}  // namespace widthlab
