#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fracdim/errors.hpp"
#include "fracdim/series.hpp"
#include "oracles.hpp"

using namespace fracdim;
using Catch::Matchers::WithinAbs;

TEST_CASE("Sampling on the uniform grid", "[series]") {
  CHECK(sample(Affine{1.0, 0.0}, 3) == TimeSeries({0.0, 0.5, 1.0}));
  CHECK(sample(Constant{2.5}, 5) == TimeSeries({2.5, 2.5, 2.5, 2.5, 2.5}));

  const TimeSeries w = sample(Weierstrass{5.0, 1.7, 1e-15}, 4);
  const double t[] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  for (std::size_t j = 1; j <= 4; ++j) {
    CHECK_THAT(w.at(j), WithinAbs(eval_weierstrass(t[j - 1], 5.0, 1.7, 1e-15), 1e-12));
  }
  CHECK_THROWS_AS(sample(Constant{1.0}, 1), AdmissibilityError);

  // Interpolant families use the grid directly, or their spline when the
  // knot grid differs from the sample grid.
  CHECK(sample(Alternating{0.0, 1.0, 0}, 5) == TimeSeries({0, 1, 0, 1, 0}));
  CHECK(sample(Alternating{0.0, 1.0, 3}, 5) == TimeSeries({0, 0.5, 1, 0.5, 0}));
}

TEST_CASE("Affine samples are collinear", "[series]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = oracle::uniform(rng, -10, 10);
    const double b = oracle::uniform(rng, -10, 10);
    const std::size_t n = oracle::uniform_int(rng, 3, 400);
    const TimeSeries ts = sample(Affine{a, b}, n);
    const double scale = std::abs(a) + std::abs(b);
    const double ulp = std::numeric_limits<double>::epsilon() * scale;
    for (std::size_t j = 2; j < n; ++j) {
      const double second = ts.at(j + 1) - 2 * ts.at(j) + ts.at(j - 1);
      REQUIRE(std::abs(second) <= 4 * ulp);
    }
  }
}

TEST_CASE("Single-index perturbation", "[series]") {
  CHECK(perturb(TimeSeries({0.0, 1.0, 0.0}), 1, 1e-10) == TimeSeries({1e-10, 1.0, 0.0}));

  const TimeSeries ts = sample(Weierstrass{}, 64);
  CHECK(perturb(ts, 17, 0.0) == ts);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t j = oracle::uniform_int(rng, 1, 64);
    const double eps = oracle::uniform(rng, -1, 1);
    const TimeSeries p = perturb(ts, j, eps);
    for (std::size_t i = 1; i <= 64; ++i) {
      if (i == j) {
        CHECK(p.at(i) == ts.at(i) + eps);
      } else {
        REQUIRE(p.at(i) == ts.at(i));
      }
    }
  }
  CHECK_THROWS_AS(perturb(ts, 0, 1.0), IndexError);
  CHECK_THROWS_AS(perturb(ts, 65, 1.0), IndexError);

  const TimeSeries alt = perturb(make_alternating_series(100, 0.4, 0.6), 1, 1e-10);
  CHECK(alt.at(1) == 0.4 + 1e-10);
  CHECK(alt.at(3) == 0.4);
}

TEST_CASE("TimeSeries invariants", "[series]") {
  CHECK_THROWS_AS(TimeSeries({1.0, NAN}), DomainError);
  CHECK_THROWS_AS(TimeSeries({1.0, INFINITY, 2.0}), DomainError);
  const TimeSeries ts({1.0, 2.0, 3.0});
  CHECK(ts.grid(1) == 0.0);
  CHECK(ts.grid(2) == 0.5);
  CHECK(ts.grid(3) == 1.0);
  CHECK_THROWS_AS(ts.at(0), IndexError);
  CHECK_THROWS_AS(ts.grid(4), IndexError);
}

TEST_CASE("Series CSV", "[series]") {
  std::ostringstream out;
  write_csv(out, TimeSeries({0.0, 0.1, 1.0 / 3.0}));
  CHECK(out.str() ==
        "j,t,x\n"
        "1,0,0\n"
        "2,0.5,0.10000000000000001\n"
        "3,1,0.33333333333333331\n");

  // Round trip is exact for arbitrary doubles, subnormals included.
  std::mt19937_64 rng(21);
  std::vector<double> values(257);
  for (double& v : values) v = std::ldexp(oracle::uniform(rng, -1, 1), static_cast<int>(rng() % 200) - 100);
  values[5] = std::numeric_limits<double>::denorm_min();
  const TimeSeries ts(values);
  std::stringstream io;
  write_csv(io, ts);
  CHECK(read_csv(io) == ts);

  std::istringstream bad_header("i,t,x\n1,0,0\n2,1,1\n");
  CHECK_THROWS_AS(read_csv(bad_header), DomainError);
  std::istringstream bad_order("j,t,x\n1,0,0\n3,1,1\n");
  CHECK_THROWS_AS(read_csv(bad_order), DomainError);
  std::istringstream bad_value("j,t,x\n1,0,0\n2,1,abc\n");
  CHECK_THROWS_AS(read_csv(bad_value), DomainError);
  std::istringstream too_short("j,t,x\n1,0,0\n");
  CHECK_THROWS_AS(read_csv(too_short), DomainError);
}
