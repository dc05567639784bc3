#pragma once

#include <cmath>
#include <vector>

namespace fracdim::detail {

// Shewchuk's non-overlapping partials (the algorithm behind Python's
// math.fsum). `value()` is the exact sum rounded to nearest.
class ExactSum {
 public:
  void add(double x) {
    std::size_t used = 0;
    for (double y : partials_) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[used++] = lo;
      x = hi;
    }
    partials_.resize(used);
    partials_.push_back(x);
  }

  // |a - b| added exactly: the rounded difference plus its rounding error.
  void add_abs_difference(double a, double b) {
    const double hi = a - b;
    const double bb = a - hi;
    const double lo = (a - (hi + bb)) + (bb - b);
    if (hi < 0.0) {
      add(-hi);
      add(-lo);
    } else {
      add(hi);
      add(lo);
    }
  }

  double value() const {
    if (partials_.empty()) return 0.0;
    std::size_t n = partials_.size();
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    // Half-way case: nudge toward the sign of the remaining partials.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = lo * 2.0;
      const double x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

 private:
  std::vector<double> partials_;
};

}  // namespace fracdim::detail
