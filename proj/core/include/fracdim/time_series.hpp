#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdim {

/// Uniformly sampled series X_N(1..N) on [0,1] with X_N(j) taken at
/// t = (j-1)/(N-1).
///
/// Public accessors use 1-based sample indices j; `values()` exposes the
/// 0-based storage for loops. Immutable after construction.
class TimeSeries {
 public:
  /// Throws DomainError if fewer than two values or any value is not finite.
  explicit TimeSeries(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }

  /// X_N(j), 1 <= j <= N. Throws IndexError otherwise.
  double at(std::size_t j) const;

  /// (j-1)/(N-1). Throws IndexError for j outside 1..N.
  double grid(std::size_t j) const;

  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const TimeSeries&) const = default;

 private:
  std::vector<double> values_;
};

/// Grid point (j-1)/(n-1) of an n-point uniform grid; the single formula
/// every module uses so that sample times agree bit for bit.
inline double grid_point(std::size_t j, std::size_t n) {
  return static_cast<double>(j - 1) / static_cast<double>(n - 1);
}

}  // namespace fracdim
