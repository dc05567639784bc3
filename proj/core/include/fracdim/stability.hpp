#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fracdim/higuchi.hpp"
#include "fracdim/time_series.hpp"

namespace fracdim {

inline constexpr double kDefaultPerturbation = 1e-10;
inline constexpr std::size_t kDefaultPerturbationIndex = 1;

/// A log-log point that enters the regression only after perturbation.
struct ResurrectedPoint {
  std::size_t k;
  Point point;
  double length;
};

struct StabilityReport {
  HfdResult base;
  HfdResult perturbed;
  double eps = 0.0;
  std::size_t index = 1;
  double applied_eps = 0.0;  // fl(X(j) + eps) - X(j), the shift actually stored
  double delta_dimension = 0.0;
  std::vector<ResurrectedPoint> new_points;  // k in I^eps but not in I
  std::vector<std::size_t> lost_indices;     // k in I but not in I^eps (cancellation)
};

/// HFD before and after adding eps to X_N(j).
StabilityReport stability_report(const TimeSeries& ts, std::size_t k_max,
                                 std::size_t j = kDefaultPerturbationIndex,
                                 double eps = kDefaultPerturbation);

/// fl(X(j) + eps) - X(j). This difference is exact (Sterbenz), so it is the
/// perturbation the perturbed series really carries.
double applied_perturbation(const TimeSeries& ts, std::size_t j, double eps);

/// Predicted L^eps(kappa) = C_{N,kappa,1} eps / kappa^2 for a length that was
/// zero before X(1) was shifted by eps. Throws AdmissibilityError when
/// (N, kappa) is not admissible.
double perturbed_length_closed_form(std::size_t n, std::size_t kappa, double eps);

struct DivergenceRow {
  double eps;
  double dimension;                      // D^eps
  std::optional<double> min_log_length;  // min of log L^eps(k) over resurrected k
  double max_length_shift;               // max over k in I of |L^eps(k) - L(k)|
  double shift_bound;                    // |applied eps| * w * max_k C_{N,k,1} / k^2
};

/// One row per eps of `eps_grid` (strictly decreasing, positive values).
/// The bound uses w = 1 for j in {1, N} and w = 2 otherwise, since an
/// interior sample enters two increments.
std::vector<DivergenceRow> divergence_trace(const TimeSeries& ts, std::size_t k_max,
                                            std::size_t j, std::span<const double> eps_grid);

}  // namespace fracdim
