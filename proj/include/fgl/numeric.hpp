#pragma once

#include <cmath>
#include <cstdint>

namespace fgl {

// Neumaier-compensated accumulator. Keeps series and product-log sums accurate
// to a few ulps independent of term count.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sum of e^{-j*s} over j > J, in log space: log(e^{-(J+1)s} / (1 - e^{-s})).
inline double log_geometric_tail(std::int64_t J, double s) {
  return -static_cast<double>(J + 1) * s - std::log1p(-std::exp(-s));
}

// Deterministic uniform draw in [0,1) from a 64-bit generator word.
inline double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace fgl
