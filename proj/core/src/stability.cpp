#include "fracdim/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdim/errors.hpp"
#include "fracdim/series.hpp"

namespace fracdim {
namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t k) {
  return std::binary_search(sorted.begin(), sorted.end(), k);
}

}  // namespace

double applied_perturbation(const TimeSeries& ts, std::size_t j, double eps) {
  const double before = ts.at(j);
  return (before + eps) - before;
}

StabilityReport stability_report(const TimeSeries& ts, std::size_t k_max, std::size_t j,
                                 double eps) {
  StabilityReport report;
  report.base = hfd(ts, k_max);
  report.perturbed = hfd(perturb(ts, j, eps), k_max);
  report.eps = eps;
  report.index = j;
  report.applied_eps = applied_perturbation(ts, j, eps);
  report.delta_dimension = report.perturbed.dimension - report.base.dimension;
  for (std::size_t i = 0; i < report.perturbed.index_set.size(); ++i) {
    const std::size_t k = report.perturbed.index_set[i];
    if (!contains(report.base.index_set, k)) {
      report.new_points.push_back({k, report.perturbed.points[i], report.perturbed.lengths[k - 1]});
    }
  }
  for (std::size_t k : report.base.index_set) {
    if (!contains(report.perturbed.index_set, k)) report.lost_indices.push_back(k);
  }
  return report;
}

double perturbed_length_closed_form(std::size_t n, std::size_t kappa, double eps) {
  AdmissiblePair::check(n, kappa);
  const auto k = static_cast<double>(kappa);
  // Same operation order as the L_1(kappa) / kappa path in curve_lengths.
  return normalization_constant(n, kappa, 1) * eps / k / k;
}

std::vector<DivergenceRow> divergence_trace(const TimeSeries& ts, std::size_t k_max,
                                            std::size_t j, std::span<const double> eps_grid) {
  if (eps_grid.empty()) throw_domain("divergence trace needs at least one eps");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0)) throw_domain("divergence trace needs positive eps values");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) {
      throw_domain("divergence trace needs a strictly decreasing eps grid");
    }
  }
  AdmissiblePair::check(ts.size(), k_max);
  if (j < 1 || j > ts.size()) throw IndexError("perturbation index " + std::to_string(j));

  const std::size_t n = ts.size();
  double max_weight = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto kd = static_cast<double>(k);
    max_weight = std::max(max_weight, normalization_constant(n, k, 1) / (kd * kd));
  }
  const double touched = (j == 1 || j == n) ? 1.0 : 2.0;

  std::vector<DivergenceRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    const StabilityReport report = stability_report(ts, k_max, j, eps);
    DivergenceRow row{eps, report.perturbed.dimension, std::nullopt, 0.0,
                      std::abs(report.applied_eps) * touched * max_weight};
    for (const ResurrectedPoint& p : report.new_points) {
      row.min_log_length = row.min_log_length ? std::min(*row.min_log_length, p.point.y) : p.point.y;
    }
    for (std::size_t k : report.base.index_set) {
      row.max_length_shift = std::max(
          row.max_length_shift, std::abs(report.perturbed.lengths[k - 1] - report.base.lengths[k - 1]));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fracdim
