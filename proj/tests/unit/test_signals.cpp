#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fracdim/errors.hpp"
#include "fracdim/signals.hpp"
#include "oracles.hpp"

using namespace fracdim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Weierstrass truncation length", "[signals]") {
  // r = 5^-0.3; the first J with r^(J+1)/(1-r) < 1e-15 is 73.
  CHECK(weierstrass_terms(5.0, 1.7, 1e-15) == 73);
  CHECK(weierstrass_terms(5.0, 1.7, 1e-15) == oracle::weierstrass_terms(5.0L, 1.7L, 1e-15L));
  for (double lambda : {1.5, 2.0, 3.0, 7.0}) {
    for (double s : {1.1, 1.5, 1.9}) {
      CAPTURE(lambda, s);
      CHECK(weierstrass_terms(lambda, s, 1e-12) == oracle::weierstrass_terms(lambda, s, 1e-12L));
    }
  }
  // Loose tolerance leaves exactly one term: r/(1-r) = 1.61 >= 1.5 > r^2/(1-r).
  CHECK(weierstrass_terms(5.0, 1.7, 1.5) == 1);
}

TEST_CASE("Weierstrass evaluation", "[signals]") {
  CHECK(eval_weierstrass(0.0, 5.0, 1.7) == 0.0);

  const int terms = weierstrass_terms(5.0, 1.7, 1e-15);
  const double extended = oracle::weierstrass_sum(0.5, 5.0, 1.7, terms + 50);
  CHECK_THAT(eval_weierstrass(0.5, 5.0, 1.7, 1e-15), WithinAbs(extended, 1e-12));

  SECTION("phases stay accurate across the interval") {
    for (double t : {1e-9, 0.1, 0.3333333333333333, 0.77, 1.0}) {
      CAPTURE(t);
      CHECK_THAT(eval_weierstrass(t, 5.0, 1.7, 1e-15),
                 WithinAbs(oracle::weierstrass_sum(t, 5.0, 1.7, terms + 50), 1e-12));
    }
    const int fractional_terms = weierstrass_terms(2.5, 1.5, 1e-15);
    for (double t : {0.2, 0.9}) {
      CAPTURE(t);
      CHECK_THAT(eval_weierstrass(t, 2.5, 1.5, 1e-15),
                 WithinAbs(oracle::weierstrass_sum(t, 2.5, 1.5, fractional_terms + 50), 1e-12));
    }
  }

  SECTION("tightening the tolerance moves values by less than the tolerance") {
    for (double tol : {1e-6, 1e-9, 1e-12}) {
      for (int i = 0; i < 1000; ++i) {
        const double t = i / 999.0;
        CHECK(std::abs(eval_weierstrass(t, 5.0, 1.7, tol) - eval_weierstrass(t, 5.0, 1.7, tol / 10)) <
              tol);
      }
    }
  }

  SECTION("parameter checks") {
    CHECK_THROWS_AS(eval_weierstrass(0.5, 1.0, 1.7), DomainError);
    CHECK_THROWS_AS(eval_weierstrass(0.5, 5.0, 2.0), DomainError);
    CHECK_THROWS_AS(eval_weierstrass(0.5, 5.0, 1.0), DomainError);
    CHECK_THROWS_AS(eval_weierstrass(0.5, 5.0, 1.7, 0.0), DomainError);
    CHECK_THROWS_AS(eval_weierstrass(1.5, 5.0, 1.7), DomainError);
  }
}

TEST_CASE("Oscillation t^2 sin(c/t)", "[signals]") {
  CHECK(eval_oscillation(0.0, 20.0) == 0.0);
  CHECK(eval_oscillation(1.0, 20.0) == std::sin(20.0));
  // 20/t* = pi/2 + 6 pi puts sin at its maximum.
  const double t_star = 20.0 / (std::numbers::pi / 2 + 6 * std::numbers::pi);
  CHECK_THAT(eval_oscillation(t_star, 20.0), WithinRel(t_star * t_star, 1e-14));

  for (int i = 0; i <= 10000; ++i) {
    const double t = i / 10000.0;
    CHECK(std::abs(eval_oscillation(t, 20.0)) <= t * t);
  }
  CHECK_THROWS_AS(eval_oscillation(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(eval_oscillation(-0.1, 20.0), DomainError);
}

TEST_CASE("Affine and constant", "[signals]") {
  CHECK(eval_affine(0.0, 2.0, 1.0) == 1.0);
  CHECK(eval_affine(1.0, 2.0, 1.0) == 3.0);
  CHECK(eval_affine(0.5, 0.0, 7.0) == 7.0);
  CHECK(eval_constant(0.5, 7.0) == 7.0);
}

TEST_CASE("Periodic and alternating series", "[signals]") {
  const auto example = periodic_example_values();
  REQUIRE(example.size() == 10);
  const TimeSeries periodic = make_periodic_series(150, example);
  CHECK(periodic.size() == 150);
  CHECK(periodic.at(1) == 1.0);
  CHECK(periodic.at(11) == 1.0);
  CHECK(periodic.at(12) == 1.1);
  for (std::size_t j = 1; j <= 150; ++j) CHECK(periodic.at(j) == example[(j - 1) % 10]);

  const std::vector<double> seven = {7.0};
  CHECK(make_periodic_series(6, seven) == TimeSeries({7, 7, 7, 7, 7, 7}));
  const std::vector<double> zero_one = {0.0, 1.0};
  CHECK(make_periodic_series(7, zero_one) == TimeSeries({0, 1, 0, 1, 0, 1, 0}));

  // kappa = 4 > ceil(6/2)
  const std::vector<double> four = {1, 2, 3, 4};
  CHECK_THROWS_AS(make_periodic_series(6, four), AdmissibilityError);

  CHECK(make_alternating_series(4, 0.0, 1.0) == TimeSeries({0, 1, 0, 1}));
  const TimeSeries alt = make_alternating_series(100, 0.4, 0.6);
  CHECK(alt.at(1) == 0.4);
  CHECK(alt.at(2) == 0.6);
  CHECK_THROWS_AS(make_alternating_series(10, 0.5, 0.5), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 300);
    const double c1 = oracle::uniform(rng, -5, 5);
    const double c2 = c1 + oracle::uniform(rng, 0.01, 5);
    const std::vector<double> pair = {c1, c2};
    CHECK(make_alternating_series(n, c1, c2) == make_periodic_series(n, pair));
  }
}

TEST_CASE("Linear spline", "[signals]") {
  CHECK(eval_spline(0.5, TimeSeries({0.0, 2.0})) == 1.0);
  CHECK(eval_spline(0.25, TimeSeries({0.0, 1.0, 0.0})) == 0.5);
  CHECK_THROWS_AS(TimeSeries({1.0}), DomainError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 500);
    std::vector<double> values(n);
    for (double& v : values) v = oracle::uniform(rng, -3, 3);
    const TimeSeries knots(values);
    for (std::size_t j = 1; j <= n; ++j) {
      REQUIRE(eval_spline(knots.grid(j), knots) == knots.at(j));
    }
  }
}

TEST_CASE("Spec evaluators agree with the closed forms", "[signals]") {
  const SignalFunction w = make_function(Weierstrass{5.0, 1.7, 1e-15});
  const SignalFunction osc = make_function(Oscillation{20.0});
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    CHECK(w(t) == eval_weierstrass(t, 5.0, 1.7, 1e-15));
    CHECK(osc(t) == eval_oscillation(t, 20.0));
  }
  CHECK(evaluate(Affine{2.0, 1.0}, 0.5) == 2.0);

  const SignalFunction spline = make_function(Alternating{0.4, 0.6, 100});
  CHECK(spline(0.0) == 0.4);
  CHECK(spline(grid_point(2, 100)) == 0.6);
  CHECK_THROWS_AS(make_function(Alternating{0.4, 0.6, 0}), DomainError);

  CHECK_THROWS_AS(validate(Alternating{1.0, 1.0, 0}), DomainError);
  CHECK_THROWS_AS(validate(Weierstrass{0.5, 1.7, 1e-15}), DomainError);
  CHECK_THROWS_AS(validate(PeriodicInterp{{}, 0}), DomainError);
  CHECK(kind_name(Oscillation{}) == "oscillation");
}
