#include "fracdim/signals.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <string>

#include <mpfr.h>

#include "fracdim/errors.hpp"

namespace fracdim {
namespace {

constexpr std::array<double, 10> kPeriodicExample = {1.0, 1.1, 1.3, 1.4, 1.3,
                                                     1.4, 1.3, 1.4, 1.3, 1.1};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw_domain("t = " + std::to_string(t) + " lies outside [0,1]");
  }
}

void check_weierstrass(double lambda, double s, double tail_tol) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) throw_domain("Weierstrass requires lambda > 1");
  if (!(s > 1.0 && s < 2.0)) throw_domain("Weierstrass requires 1 < s < 2");
  if (!(tail_tol > 0.0)) throw_domain("Weierstrass requires tail_tol > 0");
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Phases lambda^j t are huge for large j, so they are reduced modulo 2 pi in
// multiprecision. Integer lambda keeps t / 2 pi as a fraction and multiplies
// it by lambda modulo 1; other lambda form lambda^j t exactly.
class WeierstrassTable {
 public:
  WeierstrassTable(double lambda, double s, double tail_tol) : lambda_(lambda) {
    check_weierstrass(lambda, s, tail_tol);
    const int terms = weierstrass_terms(lambda, s, tail_tol);
    amplitude_.reserve(static_cast<std::size_t>(terms));
    for (int j = 1; j <= terms; ++j) amplitude_.push_back(std::pow(lambda, (s - 2.0) * j));
    integer_lambda_ = lambda == std::floor(lambda) && lambda <= 4294967295.0;
    if (integer_lambda_) {
      const auto bits = static_cast<mpfr_prec_t>(std::ceil(std::log2(lambda)));
      precision_ = 128 + bits * terms;
    } else {
      precision_ = 53 * (terms + 1);
    }
  }

  double operator()(double t) const {
    check_unit_interval(t);
    return integer_lambda_ ? sum_integer(t) : sum_general(t);
  }

 private:
  double sum_integer(double t) const {
    const auto lambda = static_cast<unsigned long>(lambda_);
    Mpfr u(precision_);
    mpfr_const_pi(u.get(), MPFR_RNDN);
    mpfr_mul_2ui(u.get(), u.get(), 1, MPFR_RNDN);
    mpfr_d_div(u.get(), t, u.get(), MPFR_RNDN);
    double sum = 0.0;
    for (double a : amplitude_) {
      mpfr_mul_ui(u.get(), u.get(), lambda, MPFR_RNDN);
      mpfr_frac(u.get(), u.get(), MPFR_RNDN);
      double f = mpfr_get_d(u.get(), MPFR_RNDN);
      if (f > 0.5) f -= 1.0;
      sum += a * std::sin(kTwoPi * f);
    }
    return sum;
  }

  double sum_general(double t) const {
    Mpfr phase(precision_);
    Mpfr out(53);
    mpfr_set_d(phase.get(), t, MPFR_RNDN);
    double sum = 0.0;
    for (double a : amplitude_) {
      mpfr_mul_d(phase.get(), phase.get(), lambda_, MPFR_RNDN);
      mpfr_sin(out.get(), phase.get(), MPFR_RNDN);
      sum += a * mpfr_get_d(out.get(), MPFR_RNDN);
    }
    return sum;
  }

  double lambda_;
  bool integer_lambda_ = false;
  mpfr_prec_t precision_ = 53;
  std::vector<double> amplitude_;
};

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

TimeSeries interpolant_knots(const SignalSpec& spec) {
  return std::visit(
      Overloaded{
          [](const PeriodicInterp& p) {
            return make_periodic_series(p.knots, p.values);
          },
          [](const Alternating& a) { return make_alternating_series(a.knots, a.c1, a.c2); },
          [](const auto&) -> TimeSeries {
            throw DomainError("not an interpolant family");
          },
      },
      spec);
}

}  // namespace

std::span<const double> periodic_example_values() { return kPeriodicExample; }

void validate(const SignalSpec& spec) {
  std::visit(
      Overloaded{
          [](const Weierstrass& w) { check_weierstrass(w.lambda, w.s, w.tail_tol); },
          [](const Oscillation& o) {
            if (!(o.c > 0.0) || !std::isfinite(o.c)) throw_domain("oscillation requires c > 0");
          },
          [](const Affine& a) {
            if (!std::isfinite(a.a) || !std::isfinite(a.b)) throw_domain("affine needs finite a, b");
          },
          [](const Constant& c) {
            if (!std::isfinite(c.c)) throw_domain("constant needs a finite value");
          },
          [](const PeriodicInterp& p) {
            if (p.values.empty()) throw_domain("periodic interpolant needs at least one value");
            for (double v : p.values) {
              if (!std::isfinite(v)) throw_domain("periodic interpolant values must be finite");
            }
            if (p.knots != 0 && (p.knots < 2 || p.values.size() > ceil_half(p.knots))) {
              throw AdmissibilityError("periodic interpolant needs kappa <= ceil(knots/2)");
            }
          },
          [](const Alternating& a) {
            if (!std::isfinite(a.c1) || !std::isfinite(a.c2)) {
              throw_domain("alternating values must be finite");
            }
            if (a.c1 == a.c2) throw_domain("alternating series requires c1 != c2");
            if (a.knots == 1) throw_domain("alternating interpolant needs knots >= 2");
          },
      },
      spec);
}

std::string_view kind_name(const SignalSpec& spec) {
  return std::visit(Overloaded{
                        [](const Weierstrass&) { return std::string_view("weierstrass"); },
                        [](const Oscillation&) { return std::string_view("oscillation"); },
                        [](const Affine&) { return std::string_view("affine"); },
                        [](const Constant&) { return std::string_view("constant"); },
                        [](const PeriodicInterp&) { return std::string_view("periodic"); },
                        [](const Alternating&) { return std::string_view("alternating"); },
                    },
                    spec);
}

int weierstrass_terms(double lambda, double s, double tail_tol) {
  check_weierstrass(lambda, s, tail_tol);
  const double ratio = std::pow(lambda, s - 2.0);
  int terms = 0;
  while (std::pow(ratio, terms + 1) / (1.0 - ratio) >= tail_tol) ++terms;
  return terms;
}

double eval_weierstrass(double t, double lambda, double s, double tail_tol) {
  return WeierstrassTable(lambda, s, tail_tol)(t);
}

double eval_oscillation(double t, double c) {
  if (!(c > 0.0)) throw_domain("oscillation requires c > 0");
  check_unit_interval(t);
  if (t == 0.0) return 0.0;
  return t * t * std::sin(c / t);
}

double eval_affine(double t, double a, double b) {
  check_unit_interval(t);
  return a * t + b;
}

double eval_constant(double t, double c) {
  check_unit_interval(t);
  return c;
}

TimeSeries make_periodic_series(std::size_t n, std::span<const double> values) {
  const std::size_t kappa = values.size();
  if (n < 2) throw AdmissibilityError("periodic series needs N >= 2");
  if (kappa < 1 || kappa > ceil_half(n)) {
    throw AdmissibilityError("periodic series needs 1 <= kappa <= ceil(N/2), got kappa = " +
                             std::to_string(kappa) + ", N = " + std::to_string(n));
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = values[i % kappa];
  return TimeSeries(std::move(out));
}

TimeSeries make_alternating_series(std::size_t n, double c1, double c2) {
  if (n < 2) throw AdmissibilityError("alternating series needs N >= 2");
  if (c1 == c2) throw_domain("alternating series requires c1 != c2");
  const std::array<double, 2> pair = {c1, c2};
  return make_periodic_series(n, pair);
}

double eval_spline(double t, const TimeSeries& knots) {
  check_unit_interval(t);
  const std::size_t n = knots.size();
  const auto x = knots.values();
  const double u = t * static_cast<double>(n - 1);
  // Grid nodes return the stored value itself, not an interpolated one.
  const auto nearest = static_cast<std::size_t>(std::llround(u));
  if (grid_point(nearest + 1, n) == t) return x[nearest];
  auto left = static_cast<std::size_t>(std::floor(u));
  if (left >= n - 1) left = n - 2;
  const double w = u - static_cast<double>(left);
  return x[left] + w * (x[left + 1] - x[left]);
}

SignalFunction make_function(const SignalSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const Weierstrass& w) -> SignalFunction {
            auto table = std::make_shared<const WeierstrassTable>(w.lambda, w.s, w.tail_tol);
            return [table](double t) { return (*table)(t); };
          },
          [](const Oscillation& o) -> SignalFunction {
            return [c = o.c](double t) { return eval_oscillation(t, c); };
          },
          [](const Affine& a) -> SignalFunction {
            return [a](double t) { return eval_affine(t, a.a, a.b); };
          },
          [](const Constant& c) -> SignalFunction {
            return [v = c.c](double t) { return eval_constant(t, v); };
          },
          [&spec](const auto& interp) -> SignalFunction {
            if (interp.knots < 2) {
              throw DomainError(std::string(kind_name(spec)) +
                                " interpolant needs knots >= 2 for continuous evaluation");
            }
            auto knots = std::make_shared<const TimeSeries>(interpolant_knots(spec));
            return [knots](double t) { return eval_spline(t, *knots); };
          },
      },
      spec);
}

double evaluate(const SignalSpec& spec, double t) { return make_function(spec)(t); }

}  // namespace fracdim
