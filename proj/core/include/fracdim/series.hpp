#pragma once

#include <cstddef>
#include <iosfwd>

#include "fracdim/signals.hpp"
#include "fracdim/time_series.hpp"

namespace fracdim {

/// X_N(j) = f((j-1)/(N-1)) for j = 1..N. Throws AdmissibilityError for N < 2.
///
/// The interpolant families (PeriodicInterp, Alternating) are defined on
/// the sample grid: with `knots` unset or equal to N the grid values are
/// produced directly; otherwise their linear spline through `knots` points
/// is sampled.
TimeSeries sample(const SignalSpec& spec, std::size_t n);

/// Copy of `ts` with X_N(j) replaced by X_N(j) + eps; every other value is
/// bit-identical. Throws IndexError for j outside 1..N.
TimeSeries perturb(const TimeSeries& ts, std::size_t j, double eps);

/// CSV with header `j,t,x`; j is 1-based, t and x are printed with 17
/// significant digits.
void write_csv(std::ostream& out, const TimeSeries& ts);

/// Reads the `j,t,x` form back. Only the x column is used; j must run 1..N
/// in order. Throws DomainError on malformed input.
TimeSeries read_csv(std::istream& in);

}  // namespace fracdim
