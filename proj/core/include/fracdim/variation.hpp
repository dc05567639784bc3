#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdim/signals.hpp"

namespace fracdim {

/// Strictly increasing points t_0 < ... < t_n of an interval [a, b].
class Partition {
 public:
  /// Throws DomainError unless there are >= 2 finite, strictly increasing
  /// points.
  explicit Partition(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double lower() const noexcept { return points_.front(); }
  double upper() const noexcept { return points_.back(); }

  /// |P| = max_i (t_i - t_{i-1}).
  double mesh() const noexcept { return mesh_; }

  /// Refinement by one point; a point already present returns a copy.
  /// Throws DomainError for a point outside [a, b].
  Partition with_point(double t) const;

 private:
  std::vector<double> points_;
  double mesh_ = 0.0;
};

/// {i / intervals : i = 0..intervals}.
Partition uniform_partition(std::size_t intervals);

/// V_P(f) = sum |f(t_i) - f(t_{i-1})| for a partition of [0,1].
///
/// The sum is rounded once from its exact value, so refining P can never
/// lower the result. Throws DomainError if P does not span [0,1].
double variation_over_partition(const SignalFunction& f, const Partition& partition);
double variation_over_partition(const SignalSpec& spec, const Partition& partition);

/// {(m+ik-1)/(N-1) : i = 0..q} with {0, 1}, q = floor((N-m)/k).
/// Throws EmptySubseriesError when q = 0.
Partition higuchi_partition(std::size_t n, std::size_t k, std::size_t m);

struct VariationTrace {
  double estimate = 0.0;               // last entry of `trace`
  std::vector<std::size_t> intervals;  // 64 * 2^n
  std::vector<double> trace;           // V over the uniform partition
};

/// V_P on the nested uniform partitions with 64 * 2^n intervals,
/// n = 0..levels-1. Throws DomainError for levels < 2.
VariationTrace total_variation_estimate(const SignalFunction& f, std::size_t levels);
VariationTrace total_variation_estimate(const SignalSpec& spec, std::size_t levels);

struct ConvergenceRow {
  std::size_t n;
  double subseries_variation;  // V_{N,k,m}
  double partition_variation;  // V_{P_N}
  double endpoint_correction;  // e_N = |f(0) - f(l_N)| + |f(1) - f(r_N)|
  double residual;             // V_{P_N} - (V_{N,k,m} + e_N)
};

/// One row per N of `n_grid` (strictly ascending). Each N must satisfy
/// 1 <= m <= k <= ceil(N/2) with q >= 1.
std::vector<ConvergenceRow> variation_convergence_check(const SignalFunction& f, std::size_t k,
                                                        std::size_t m,
                                                        std::span<const std::size_t> n_grid);
std::vector<ConvergenceRow> variation_convergence_check(const SignalSpec& spec, std::size_t k,
                                                        std::size_t m,
                                                        std::span<const std::size_t> n_grid);

}  // namespace fracdim
