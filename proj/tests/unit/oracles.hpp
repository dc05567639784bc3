#pragma once

// Reference computations for the unit tests. Each one takes a different
// route from the library: explicit index lists instead of increment counts,
// normal equations instead of centred sums, sets of cells instead of
// per-column row spans, critical points instead of partitions.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <mpfr.h>

namespace oracle {

// Higuchi's construction on explicit subseries X(m), X(m+k), ..., X(m+q k)
// with every index <= N, in long double.
inline std::vector<long double> higuchi_lengths(const std::vector<double>& x, std::size_t k_max) {
  const std::size_t n = x.size();
  std::vector<long double> lengths;
  for (std::size_t k = 1; k <= k_max; ++k) {
    long double total = 0.0L;
    std::size_t subseries = 0;
    for (std::size_t m = 1; m <= k; ++m) {
      std::vector<std::size_t> idx;
      for (std::size_t j = m; j <= n; j += k) idx.push_back(j);
      if (idx.size() < 2) continue;
      long double v = 0.0L;
      for (std::size_t i = 1; i < idx.size(); ++i) {
        v += std::fabs(static_cast<long double>(x[idx[i] - 1]) - x[idx[i - 1] - 1]);
      }
      const long double increments = static_cast<long double>(idx.size() - 1);
      total += v * static_cast<long double>(n - 1) / (increments * k) / k;
      ++subseries;
    }
    lengths.push_back(subseries == 0 ? 0.0L : total / subseries);
  }
  return lengths;
}

inline long double ols_slope(const std::vector<std::pair<long double, long double>>& pts) {
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const long double n = static_cast<long double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline long double higuchi_dimension(const std::vector<double>& x, std::size_t k_max) {
  const auto lengths = higuchi_lengths(x, k_max);
  std::vector<std::pair<long double, long double>> pts;
  for (std::size_t k = 1; k <= lengths.size(); ++k) {
    if (lengths[k - 1] != 0.0L) pts.emplace_back(std::log(1.0L / k), std::log(lengths[k - 1]));
  }
  return pts.size() <= 1 ? 1.0L : ols_slope(pts);
}

// Smallest J with sum_{j>J} r^j < tol, comparing logarithms in long double.
inline int weierstrass_terms(long double lambda, long double s, long double tol) {
  const long double log_r = (s - 2.0L) * std::log(lambda);
  const long double log_one_minus_r = std::log1p(-std::exp(log_r));
  int j = 0;
  while ((j + 1) * log_r - log_one_minus_r >= std::log(tol)) ++j;
  return j;
}

// Partial sum with every phase lambda^j t formed exactly and all arithmetic at 256 bits.
inline double weierstrass_sum(double t, double lambda, double s, int terms) {
  mpfr_t sum, amp, phase, e;
  mpfr_inits2(256, sum, amp, e, static_cast<mpfr_ptr>(nullptr));
  mpfr_init2(phase, 64 + 53 * (terms + 1));
  mpfr_set_zero(sum, 1);
  for (int j = 1; j <= terms; ++j) {
    mpfr_set_d(phase, lambda, MPFR_RNDN);
    mpfr_pow_ui(phase, phase, static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_mul_d(phase, phase, t, MPFR_RNDN);
    mpfr_sin(e, phase, MPFR_RNDN);
    mpfr_set_d(amp, s, MPFR_RNDN);
    mpfr_sub_ui(amp, amp, 2, MPFR_RNDN);
    mpfr_mul_si(amp, amp, j, MPFR_RNDN);
    mpfr_set_d(phase, lambda, MPFR_RNDN);
    mpfr_pow(amp, phase, amp, MPFR_RNDN);
    mpfr_fma(sum, amp, e, sum, MPFR_RNDN);
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(sum, amp, phase, e, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Column-filled delta-mesh count via an explicit set of hit cells.
inline std::size_t box_cells(const std::function<double(double)>& f, double delta, std::size_t spc) {
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  const auto columns = static_cast<std::int64_t>(std::floor(1.0 / delta));
  for (std::int64_t c = 0; c <= columns; ++c) {
    const double a = c * delta;
    if (a > 1.0) break;
    const double b = std::min((c + 1) * delta, 1.0);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < spc; ++i) {
      const double t = i + 1 == spc ? b : a + (b - a) * (static_cast<double>(i) / (spc - 1));
      lo = std::min(lo, f(t));
      hi = std::max(hi, f(t));
    }
    for (auto r = static_cast<std::int64_t>(std::floor(lo / delta));
         r <= static_cast<std::int64_t>(std::floor(hi / delta)); ++r) {
      cells.emplace(c, r);
    }
  }
  return cells.size();
}

// Total variation of t^2 sin(c/t) on [0,1] from its critical points. With
// u = c/t, f'(t) = 0 iff tan u = u/2; there is one root per branch
// (n pi - pi/2, n pi + pi/2). Branches beyond `branches` contribute
// |f(t_n) - f(t_{n+1})| ~ t_n^2 + t_{n+1}^2, summed in closed form.
inline long double oscillation_total_variation(long double c, std::size_t branches = 200000) {
  const long double pi = std::numbers::pi_v<long double>;
  auto f = [c](long double t) { return t == 0 ? 0.0L : t * t * std::sin(c / t); };
  auto root = [](long double lo, long double hi) {
    // g(u) = 2 sin u - u cos u changes sign on each branch.
    auto g = [](long double u) { return 2 * std::sin(u) - u * std::cos(u); };
    long double glo = g(lo);
    for (int it = 0; it < 200; ++it) {
      const long double mid = 0.5L * (lo + hi);
      const long double gm = g(mid);
      if ((gm < 0) == (glo < 0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
      if (hi - lo <= 1e-18L * hi) break;
    }
    return 0.5L * (lo + hi);
  };
  std::vector<long double> crit;  // critical t, descending
  const auto first = static_cast<std::size_t>(std::floor(c / pi + 0.5L));
  for (std::size_t n = first; n < first + branches; ++n) {
    long double lo = n * pi - pi / 2 + 1e-15L;
    long double hi = n * pi + pi / 2 - 1e-15L;
    if (hi <= c) continue;
    lo = std::max(lo, c);
    const long double u = root(lo, hi);
    if (u >= c) crit.push_back(c / u);
  }
  long double tv = std::fabs(f(1.0L) - f(crit.front()));
  for (std::size_t i = 1; i < crit.size(); ++i) tv += std::fabs(f(crit[i - 1]) - f(crit[i]));
  // Points beyond the last computed branch nl: their sum is
  // t_L^2 + 2 sum_{n > nl} t_n^2, and sum_{n >= N} 1/(pi(n+1/2))^2 ~ 1/(pi^2 N).
  const long double t_last = crit.back();
  const long double next_branch = static_cast<long double>(first + branches);
  tv += t_last * t_last + 2 * c * c / (pi * pi * next_branch);
  return tv;
}

// 53 random bits mapped to [0,1); identical on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

}  // namespace oracle
