#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "fracdim/time_series.hpp"

namespace fracdim {

inline constexpr double kDefaultTailTolerance = 1e-15;

/// W(t) = sum_{j>=1} lambda^{(s-2)j} sin(lambda^j t), lambda > 1, 1 < s < 2.
/// The series is truncated once the geometric tail bound drops below
/// `tail_tol`.
struct Weierstrass {
  double lambda = 5.0;
  double s = 1.7;
  double tail_tol = kDefaultTailTolerance;
};

/// f_c(t) = t^2 sin(c/t) with f_c(0) = 0; continuous and of bounded variation.
struct Oscillation {
  double c = 20.0;
};

struct Affine {
  double a = 1.0;
  double b = 0.0;
};

struct Constant {
  double c = 0.0;
};

/// Series with X_N(j) = values[(j-1) mod kappa]. `knots` fixes the grid of
/// the continuous (linear spline) interpolant; 0 means "the sample grid".
struct PeriodicInterp {
  std::vector<double> values;
  std::size_t knots = 0;
};

/// Odd samples c1, even samples c2 (c1 != c2). `knots` as in PeriodicInterp.
struct Alternating {
  double c1 = 0.4;
  double c2 = 0.6;
  std::size_t knots = 0;
};

using SignalSpec =
    std::variant<Weierstrass, Oscillation, Affine, Constant, PeriodicInterp, Alternating>;

/// Continuous evaluator t -> f(t) on [0,1].
using SignalFunction = std::function<double(double)>;

/// The interpolation vector of the periodic counterexample with kappa = 10.
std::span<const double> periodic_example_values();

/// Throws DomainError when the parameters violate the family's invariants.
void validate(const SignalSpec& spec);

/// Lowercase family name: weierstrass, oscillation, affine, constant,
/// periodic, alternating.
std::string_view kind_name(const SignalSpec& spec);

/// Smallest J >= 0 with r^{J+1} / (1 - r) < tail_tol, r = lambda^{s-2}.
int weierstrass_terms(double lambda, double s, double tail_tol);

/// Truncated Weierstrass sum. Throws DomainError for lambda <= 1, s outside
/// (1,2), tail_tol <= 0 or t outside [0,1].
double eval_weierstrass(double t, double lambda, double s,
                        double tail_tol = kDefaultTailTolerance);

double eval_oscillation(double t, double c);
double eval_affine(double t, double a, double b);
double eval_constant(double t, double c);

/// X_N(j) = values[(j-1) mod kappa]. Requires 1 <= kappa <= ceil(N/2)
/// (AdmissibilityError otherwise).
TimeSeries make_periodic_series(std::size_t n, std::span<const double> values);

/// X_N(j) = c1 for odd j, c2 for even j. Requires N >= 2 and c1 != c2.
TimeSeries make_alternating_series(std::size_t n, double c1, double c2);

/// Linear spline through ((j-1)/(N-1), X_N(j)). Knot values are returned
/// bit-exactly at grid nodes.
double eval_spline(double t, const TimeSeries& knots);

/// Evaluator for `spec`. Interpolant families need `knots` >= 2.
/// Precomputes coefficient tables, so prefer it over repeated `evaluate`.
SignalFunction make_function(const SignalSpec& spec);

double evaluate(const SignalSpec& spec, double t);

}  // namespace fracdim
