#include "fracdim/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "fracdim/errors.hpp"

namespace fracdim {
namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw_domain("box counting needs 0 < delta <= 1");
}

}  // namespace

std::int64_t box_count(const SignalFunction& f, double delta, std::size_t samples_per_column) {
  check_delta(delta);
  if (samples_per_column < 2) throw_domain("box counting needs at least two samples per column");
  const auto columns = static_cast<std::int64_t>(std::floor(1.0 / delta));
  const auto last = static_cast<double>(samples_per_column - 1);
  std::int64_t count = 0;
  for (std::int64_t c = 0; c <= columns; ++c) {
    const double left = static_cast<double>(c) * delta;
    if (left > 1.0) break;
    const double right = std::min(static_cast<double>(c + 1) * delta, 1.0);
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < samples_per_column; ++i) {
      const double t =
          i + 1 == samples_per_column ? right
                                      : left + (right - left) * (static_cast<double>(i) / last);
      const double v = f(t);
      if (i == 0 || v < lo) lo = v;
      if (i == 0 || v > hi) hi = v;
    }
    count += static_cast<std::int64_t>(std::floor(hi / delta)) -
             static_cast<std::int64_t>(std::floor(lo / delta)) + 1;
  }
  return count;
}

std::int64_t box_count(const SignalSpec& spec, double delta, std::size_t samples_per_column) {
  return box_count(make_function(spec), delta, samples_per_column);
}

double area_from_count(double delta, std::int64_t count) {
  return delta * delta * static_cast<double>(count);
}

std::vector<double> geometric_delta_grid(double delta_min, double delta_max, std::size_t levels) {
  if (!(delta_min > 0.0 && delta_min < delta_max && delta_max <= 1.0)) {
    throw_domain("delta grid needs 0 < delta_min < delta_max <= 1");
  }
  if (levels < 2) throw_domain("delta grid needs at least two levels");
  std::vector<double> grid(levels);
  const double ratio = delta_min / delta_max;
  for (std::size_t i = 0; i < levels; ++i) {
    grid[i] = delta_max * std::pow(ratio, static_cast<double>(i) / static_cast<double>(levels - 1));
  }
  grid.front() = delta_max;
  grid.back() = delta_min;
  return grid;
}

BoxCountResult box_dim_estimate(const SignalFunction& f, double delta_min, double delta_max,
                                std::size_t levels, std::size_t samples_per_column) {
  BoxCountResult result;
  result.deltas = geometric_delta_grid(delta_min, delta_max, levels);
  std::vector<Point> points;
  points.reserve(levels);
  for (double delta : result.deltas) {
    const std::int64_t count = box_count(f, delta, samples_per_column);
    result.counts.push_back(count);
    result.areas.push_back(area_from_count(delta, count));
    points.push_back({std::log(1.0 / delta), std::log(static_cast<double>(count))});
  }
  const LineFit fit = regression_slope(points);
  result.dimension = fit.slope;
  result.intercept = fit.intercept;
  result.in_range = fit.slope >= 0.0 && fit.slope <= 2.0;
  return result;
}

BoxCountResult box_dim_estimate(const SignalSpec& spec, double delta_min, double delta_max,
                                std::size_t levels, std::size_t samples_per_column) {
  return box_dim_estimate(make_function(spec), delta_min, delta_max, levels, samples_per_column);
}

std::vector<double> tilde_lengths(const TimeSeries& ts, std::size_t k_max) {
  const AdmissiblePair pair = AdmissiblePair::check(ts.size(), k_max);
  const auto span = static_cast<double>(pair.n - 1);
  std::vector<double> areas(pair.k_max, 0.0);
  for (std::size_t k = 1; k <= pair.k_max; ++k) {
    const double width = static_cast<double>(k) / span;
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t m = 1; m <= k; ++m) {
      if (increments_count(pair.n, k, m) == 0) continue;
      sum += width * normalization_constant(pair.n, k, m) * variation_sum(ts, k, m);
      ++used;
    }
    areas[k - 1] = used == 0 ? 0.0 : sum / static_cast<double>(used);
  }
  return areas;
}

GeometricFit geometric_fit(const TimeSeries& ts, std::size_t k_max) {
  const std::vector<double> areas = tilde_lengths(ts, k_max);
  const auto span = static_cast<double>(ts.size() - 1);
  GeometricFit fit;
  for (std::size_t k = 1; k <= areas.size(); ++k) {
    if (areas[k - 1] == 0.0) continue;
    fit.index_set.push_back(k);
    fit.points.push_back({std::log(static_cast<double>(k) / span), std::log(areas[k - 1])});
  }
  if (fit.points.size() >= 2) {
    fit.area_slope = regression_slope(fit.points).slope;
    fit.dimension = 2.0 - fit.area_slope;
  }
  return fit;
}

double geometric_hfd(const TimeSeries& ts, std::size_t k_max) {
  return geometric_fit(ts, k_max).dimension;
}

}  // namespace fracdim
