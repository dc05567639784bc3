#include "fracdim/variation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exact_sum.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/higuchi.hpp"

namespace fracdim {
namespace {

constexpr std::size_t kBaseIntervals = 64;

double mesh_of(std::span<const double> points) {
  double mesh = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) mesh = std::max(mesh, points[i] - points[i - 1]);
  return mesh;
}

}  // namespace

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw_domain("a partition needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw_domain("partition points must be finite");
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw_domain("partition points must be strictly increasing");
    }
  }
  mesh_ = mesh_of(points_);
}

Partition Partition::with_point(double t) const {
  if (!(t >= lower() && t <= upper())) throw_domain("refinement point outside the partition");
  const auto pos = std::lower_bound(points_.begin(), points_.end(), t);
  if (pos != points_.end() && *pos == t) return *this;
  std::vector<double> refined(points_.begin(), pos);
  refined.push_back(t);
  refined.insert(refined.end(), pos, points_.end());
  return Partition(std::move(refined));
}

Partition uniform_partition(std::size_t intervals) {
  if (intervals < 1) throw_domain("a uniform partition needs at least one interval");
  std::vector<double> points(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    points[i] = static_cast<double>(i) / static_cast<double>(intervals);
  }
  return Partition(std::move(points));
}

double variation_over_partition(const SignalFunction& f, const Partition& partition) {
  if (partition.lower() != 0.0 || partition.upper() != 1.0) {
    throw_domain("variation over [0,1] needs a partition from 0 to 1");
  }
  const auto t = partition.points();
  detail::ExactSum sum;
  double previous = f(t[0]);
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double current = f(t[i]);
    sum.add_abs_difference(current, previous);
    previous = current;
  }
  return sum.value();
}

double variation_over_partition(const SignalSpec& spec, const Partition& partition) {
  return variation_over_partition(make_function(spec), partition);
}

Partition higuchi_partition(std::size_t n, std::size_t k, std::size_t m) {
  const std::size_t q = increments_count(n, k, m);
  if (q == 0) {
    throw EmptySubseriesError("subseries (N, k, m) = (" + std::to_string(n) + ", " +
                              std::to_string(k) + ", " + std::to_string(m) + ") has no increments");
  }
  std::vector<double> points;
  points.reserve(q + 3);
  points.push_back(0.0);
  for (std::size_t i = 0; i <= q; ++i) points.push_back(grid_point(m + i * k, n));
  points.push_back(1.0);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Partition(std::move(points));
}

VariationTrace total_variation_estimate(const SignalFunction& f, std::size_t levels) {
  if (levels < 2) throw_domain("a variation trace needs at least two levels");
  VariationTrace result;
  for (std::size_t level = 0; level < levels; ++level) {
    const std::size_t intervals = kBaseIntervals << level;
    result.intervals.push_back(intervals);
    result.trace.push_back(variation_over_partition(f, uniform_partition(intervals)));
  }
  result.estimate = result.trace.back();
  return result;
}

VariationTrace total_variation_estimate(const SignalSpec& spec, std::size_t levels) {
  return total_variation_estimate(make_function(spec), levels);
}

std::vector<ConvergenceRow> variation_convergence_check(const SignalFunction& f, std::size_t k,
                                                        std::size_t m,
                                                        std::span<const std::size_t> n_grid) {
  if (k < 1 || m < 1 || m > k) throw_domain("convergence check needs 1 <= m <= k");
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_grid.size());
  for (std::size_t idx = 0; idx < n_grid.size(); ++idx) {
    const std::size_t n = n_grid[idx];
    if (idx > 0 && n <= n_grid[idx - 1]) throw_domain("N grid must be strictly ascending");
    if (!is_admissible(n, k)) {
      throw AdmissibilityError("k = " + std::to_string(k) + " is not admissible for N = " +
                               std::to_string(n));
    }
    std::vector<double> samples(n);
    for (std::size_t j = 1; j <= n; ++j) samples[j - 1] = f(grid_point(j, n));
    const TimeSeries ts(std::move(samples));

    const std::size_t q = increments_count(n, k, m);
    const double left = grid_point(m, n);
    const double right = grid_point(m + q * k, n);
    ConvergenceRow row{};
    row.n = n;
    row.subseries_variation = variation_sum(ts, k, m);
    row.partition_variation = variation_over_partition(f, higuchi_partition(n, k, m));
    row.endpoint_correction = std::abs(f(0.0) - f(left)) + std::abs(f(1.0) - f(right));
    row.residual = row.partition_variation - (row.subseries_variation + row.endpoint_correction);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConvergenceRow> variation_convergence_check(const SignalSpec& spec, std::size_t k,
                                                        std::size_t m,
                                                        std::span<const std::size_t> n_grid) {
  return variation_convergence_check(make_function(spec), k, m, n_grid);
}

}  // namespace fracdim
