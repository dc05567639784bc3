#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fracdim/higuchi.hpp"
#include "fracdim/signals.hpp"
#include "fracdim/time_series.hpp"

namespace fracdim {

inline constexpr double kDefaultDeltaMin = 1e-3;
inline constexpr double kDefaultDeltaMax = 1e-1;
inline constexpr std::size_t kDefaultDeltaLevels = 12;
inline constexpr std::size_t kDefaultSamplesPerColumn = 64;

/// delta-mesh count M_delta of graph(f) over [0,1].
///
/// Cells are (floor(t/delta), floor(f(t)/delta)), anchored at the origin.
/// Column c covers [c delta, min((c+1) delta, 1)], c = 0..floor(1/delta);
/// f is sampled at `samples_per_column` equispaced points of the column and
/// every row between the lowest and highest sampled row is counted.
std::int64_t box_count(const SignalFunction& f, double delta, std::size_t samples_per_column);
std::int64_t box_count(const SignalSpec& spec, double delta, std::size_t samples_per_column);

/// delta^2 M.
double area_from_count(double delta, std::int64_t count);

/// `levels` geometrically spaced values from delta_max down to delta_min.
std::vector<double> geometric_delta_grid(double delta_min, double delta_max, std::size_t levels);

struct BoxCountResult {
  std::vector<double> deltas;
  std::vector<std::int64_t> counts;
  std::vector<double> areas;
  double dimension = 0.0;  // slope of log M against log(1/delta)
  double intercept = 0.0;
  bool in_range = true;  // dimension within [0, 2]
};

BoxCountResult box_dim_estimate(const SignalFunction& f, double delta_min, double delta_max,
                                std::size_t levels, std::size_t samples_per_column);
BoxCountResult box_dim_estimate(const SignalSpec& spec, double delta_min, double delta_max,
                                std::size_t levels, std::size_t samples_per_column);

/// L~(k/(N-1)) for k = 1..k_max: mean over offsets m with q >= 1 of the
/// area approximations (k/(N-1)) C_{N,k,m} V_{N,k,m}.
std::vector<double> tilde_lengths(const TimeSeries& ts, std::size_t k_max);

struct GeometricFit {
  std::vector<std::size_t> index_set;  // k with L~ != 0
  std::vector<Point> points;           // (log k/(N-1), log L~(k/(N-1)))
  double area_slope = 0.0;             // L; 0 when fewer than two points
  double dimension = 1.0;              // 2 - L, or 1 when fewer than two points
};

/// Area-based estimator: regression of log L~ on log(k/(N-1)) over the
/// nonzero areas, dimension 2 - slope.
GeometricFit geometric_fit(const TimeSeries& ts, std::size_t k_max);
double geometric_hfd(const TimeSeries& ts, std::size_t k_max);

}  // namespace fracdim
