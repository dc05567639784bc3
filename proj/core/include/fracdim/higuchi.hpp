#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fracdim/time_series.hpp"

namespace fracdim {

/// ceil(N/2), the largest admissible k_max for N samples.
constexpr std::size_t max_admissible_k(std::size_t n) { return (n + 1) / 2; }

/// N >= 2 and 1 <= k_max <= ceil(N/2).
constexpr bool is_admissible(std::size_t n, std::size_t k_max) {
  return n >= 2 && k_max >= 1 && k_max <= max_admissible_k(n);
}

/// A validated (N, k_max) pair.
struct AdmissiblePair {
  std::size_t n;
  std::size_t k_max;

  /// Throws AdmissibilityError when the pair is not admissible.
  static AdmissiblePair check(std::size_t n, std::size_t k_max);
};

/// q = floor((N-m)/k), the number of increments of X(m), X(m+k), ... that
/// stay inside 1..N.
std::size_t increments_count(std::size_t n, std::size_t k, std::size_t m);

/// C_{N,k,m} = (N-1) / (q k). Throws EmptySubseriesError when q = 0.
double normalization_constant(std::size_t n, std::size_t k, std::size_t m);

/// V_{N,k,m} = sum_{i=1..q} |X(m+ik) - X(m+(i-1)k)|, summed in ascending i;
/// 0 when q = 0.
double variation_sum(const TimeSeries& ts, std::size_t k, std::size_t m);

/// One (k, m) term of the length computation.
struct SubseriesTerm {
  std::size_t k;
  std::size_t m;
  std::size_t increments;
  double normalization;
  double variation;
  double length;  // L_m(k) = C V / k
};

/// L(1..k_max). L(k) is the mean of L_m(k) over the offsets m with q >= 1,
/// and 0 if there are none. Throws AdmissibilityError.
std::vector<double> curve_lengths(const TimeSeries& ts, std::size_t k_max);

struct Point {
  double x;
  double y;
  bool operator==(const Point&) const = default;
};

struct LineFit {
  double slope;
  double intercept;
};

/// Ordinary least squares through `points` (centred two-pass formula).
/// Throws DegenerateRegressionError for fewer than two points or when every
/// x is equal.
LineFit regression_slope(std::span<const Point> points);

struct HfdResult {
  std::size_t n = 0;
  std::size_t k_max = 0;
  std::vector<double> lengths;         // L(k), k = 1..k_max
  std::vector<std::size_t> index_set;  // k with L(k) != 0, ascending
  std::vector<Point> points;           // (log 1/k, log L(k)) for k in index_set
  double dimension = 1.0;              // D; 1 when |index_set| <= 1
  std::optional<double> intercept;     // empty when no line was fitted
  std::vector<SubseriesTerm> terms;    // filled only on request
};

/// Index set, log-log points and slope from a length vector L(1..k_max).
/// Zero lengths are excluded exactly (no threshold).
HfdResult fit_lengths(std::size_t n, std::vector<double> lengths);

/// Higuchi fractal dimension of `ts` with parameter k_max.
HfdResult hfd(const TimeSeries& ts, std::size_t k_max, bool keep_terms = false);

}  // namespace fracdim
