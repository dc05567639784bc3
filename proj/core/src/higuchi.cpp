#include "fracdim/higuchi.hpp"

#include <cmath>
#include <string>

#include "fracdim/errors.hpp"

namespace fracdim {
namespace {

SubseriesTerm subseries_term(const TimeSeries& ts, std::size_t k, std::size_t m) {
  const std::size_t n = ts.size();
  SubseriesTerm term{k, m, increments_count(n, k, m), 0.0, 0.0, 0.0};
  if (term.increments == 0) return term;
  term.normalization = normalization_constant(n, k, m);
  term.variation = variation_sum(ts, k, m);
  term.length = term.normalization * term.variation / static_cast<double>(k);
  return term;
}

std::vector<double> lengths_impl(const TimeSeries& ts, std::size_t k_max,
                                 std::vector<SubseriesTerm>* terms) {
  const AdmissiblePair pair = AdmissiblePair::check(ts.size(), k_max);
  std::vector<double> lengths(pair.k_max, 0.0);
  for (std::size_t k = 1; k <= pair.k_max; ++k) {
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t m = 1; m <= k; ++m) {
      const SubseriesTerm term = subseries_term(ts, k, m);
      if (terms) terms->push_back(term);
      if (term.increments == 0) continue;
      sum += term.length;
      ++used;
    }
    lengths[k - 1] = used == 0 ? 0.0 : sum / static_cast<double>(used);
  }
  return lengths;
}

}  // namespace

AdmissiblePair AdmissiblePair::check(std::size_t n, std::size_t k_max) {
  if (!is_admissible(n, k_max)) {
    throw AdmissibilityError("(N, k_max) = (" + std::to_string(n) + ", " + std::to_string(k_max) +
                             ") is not admissible: need N >= 2 and 1 <= k_max <= ceil(N/2)");
  }
  return {n, k_max};
}

std::size_t increments_count(std::size_t n, std::size_t k, std::size_t m) {
  if (k == 0 || m == 0 || m > n) return 0;
  return (n - m) / k;
}

double normalization_constant(std::size_t n, std::size_t k, std::size_t m) {
  const std::size_t q = increments_count(n, k, m);
  if (q == 0) {
    throw EmptySubseriesError("subseries (N, k, m) = (" + std::to_string(n) + ", " +
                              std::to_string(k) + ", " + std::to_string(m) + ") has no increments");
  }
  return static_cast<double>(n - 1) / static_cast<double>(q * k);
}

double variation_sum(const TimeSeries& ts, std::size_t k, std::size_t m) {
  const std::size_t q = increments_count(ts.size(), k, m);
  const auto x = ts.values();
  double sum = 0.0;
  // 0-based: X(m + ik) is x[m - 1 + ik].
  for (std::size_t i = 1; i <= q; ++i) {
    sum += std::abs(x[m - 1 + i * k] - x[m - 1 + (i - 1) * k]);
  }
  return sum;
}

std::vector<double> curve_lengths(const TimeSeries& ts, std::size_t k_max) {
  return lengths_impl(ts, k_max, nullptr);
}

LineFit regression_slope(std::span<const Point> points) {
  if (points.size() < 2) throw DegenerateRegressionError("regression needs at least two points");
  const auto count = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const Point& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const Point& p : points) {
    sxy += (p.x - mean_x) * (p.y - mean_y);
    sxx += (p.x - mean_x) * (p.x - mean_x);
  }
  if (sxx == 0.0) throw DegenerateRegressionError("all abscissae are equal");
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x};
}

HfdResult fit_lengths(std::size_t n, std::vector<double> lengths) {
  HfdResult result;
  result.n = n;
  result.k_max = lengths.size();
  for (std::size_t k = 1; k <= lengths.size(); ++k) {
    const double length = lengths[k - 1];
    if (length != 0.0) {
      result.index_set.push_back(k);
      result.points.push_back({std::log(1.0 / static_cast<double>(k)), std::log(length)});
    }
  }
  result.lengths = std::move(lengths);
  if (result.index_set.size() >= 2) {
    const LineFit fit = regression_slope(result.points);
    result.dimension = fit.slope;
    result.intercept = fit.intercept;
  }
  return result;
}

HfdResult hfd(const TimeSeries& ts, std::size_t k_max, bool keep_terms) {
  std::vector<SubseriesTerm> terms;
  HfdResult result = fit_lengths(ts.size(), lengths_impl(ts, k_max, keep_terms ? &terms : nullptr));
  result.terms = std::move(terms);
  return result;
}

}  // namespace fracdim
