#ifndef LOTSIZER_STABLE_SUM_HPP_
#define LOTSIZER_STABLE_SUM_HPP_

#include <cmath>

namespace lotsizer {

// Neumaier compensated summation. Accumulating costs with this keeps totals
// reproducible to ~1e-15 relative no matter how the terms are ordered, which
// is what lets objective evaluations agree to 1e-9 across code paths.
class StableSum {
 public:
  StableSum() = default;

  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace lotsizer

#endif  // LOTSIZER_STABLE_SUM_HPP_
