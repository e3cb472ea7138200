#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dirichlet_roots/dirichlet_eval.hpp"
#include "doctest.h"

using namespace dirichlet_roots;

namespace {

// Independent reference: long double, naive loop, no tables.
long double reference_value(const CoefficientSample& s, double t) {
  long double acc = 0.0L;
  const int k = s.spec.derivative_order();
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const long double n = i + 1;
    const long double L = std::log(n);
    const long double w = std::pow(L, k) / std::pow(n, (long double)s.spec.sigma());
    const long double trig = s.spec.part() == Part::cosine ? std::cos(t * L) : std::sin(t * L);
    acc += s.values[i] * w * trig;
  }
  return acc;
}

}  // namespace

TEST_CASE("weight table layout") {
  const WeightTable t0(make_spec(50, 0, 0.5));
  REQUIRE(t0.size() == 50);
  CHECK(t0.logs()[0] == 0.0);
  CHECK(t0.weights()[0] == 1.0);
  for (std::size_t i = 1; i < t0.size(); ++i) CHECK(t0.logs()[i] > t0.logs()[i - 1]);
  CHECK(t0.weights()[3] == doctest::Approx(0.5));

  const WeightTable t2(make_spec(50, 2, 0.25));
  CHECK(t2.weights()[0] == 0.0);
  CHECK(t2.weights()[9] == doctest::Approx(std::pow(std::log(10.0), 2) / std::pow(10.0, 0.25)));
  CHECK(t2.squared_weights()[9] == doctest::Approx(t2.weights()[9] * t2.weights()[9]));
  CHECK_THROWS_AS((void)t2.scaled(0.0), std::invalid_argument);
}

TEST_CASE("eval_polynomial closed forms") {
  const auto spec = make_spec(2.5, 0, 0.5);
  const WeightTable table(spec);
  const auto two = fixed_coefficients(spec, {0.0, 1.0});
  CHECK(std::abs(eval_polynomial(two, table, std::numbers::pi / (2 * std::log(2.0)))) < 1e-15);

  const auto one = fixed_coefficients(spec, {1.0, 0.0});
  for (double t : {-3.0, 0.0, 17.25, 1e5}) CHECK(eval_polynomial(one, table, t) == 1.0);

  // sum_{n<=10} 1/sqrt(n)
  const auto spec10 = make_spec(10, 0, 0.5);
  const auto ones = fixed_coefficients(spec10, std::vector<double>(10, 1.0));
  CHECK(eval_polynomial(ones, WeightTable(spec10), 0.0) ==
        doctest::Approx(5.0209978992926665).epsilon(1e-15));
}

TEST_CASE("eval_polynomial matches a long double reference") {
  struct Case {
    int k;
    double sigma;
    Part part;
  };
  for (auto [k, sigma, part] : {Case{0, 0.5, Part::cosine}, Case{1, 0.5, Part::sine},
                                Case{2, 0.25, Part::cosine}, Case{3, 0.9, Part::sine}}) {
    const auto spec = make_spec(400, k, sigma, part);
    const WeightTable table(spec);
    const auto s = sample_coefficients(spec, 11, static_cast<std::uint64_t>(k));
    const double scale = table.l1_mass(s.values);
    for (double t : {0.3, 401.7, 799.99}) {
      CHECK(std::abs(eval_polynomial(s, table, t) - (double)reference_value(s, t)) < 1e-13 * scale);
    }
  }
}

TEST_CASE("eval_polynomial rejects a foreign weight table") {
  const auto s = sample_coefficients(make_spec(20, 0, 0.5), 1, 0);
  CHECK_THROWS_AS(eval_polynomial(s, WeightTable(make_spec(20, 1, 0.5)), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_polynomial(s, WeightTable(make_spec(21, 0, 0.5)), 1.0), std::invalid_argument);
}

TEST_CASE("cosine polynomial is even in t") {
  const auto spec = make_spec(300, 1, 0.5, Part::cosine);
  const WeightTable table(spec);
  const auto s = sample_coefficients(spec, 3, 3);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(0.0, 1e4);
  for (int i = 0; i < 200; ++i) {
    const double t = dist(rng);
    CHECK(eval_polynomial(s, table, t) == eval_polynomial(s, table, -t));
  }
}

TEST_CASE("grid of one point equals the direct value") {
  const auto spec = make_spec(123, 0, 0.5);
  const WeightTable table(spec);
  const auto s = sample_coefficients(spec, 1, 1);
  const auto g = eval_grid(s, table, 150.25, 0.1, 1);
  REQUIRE(g.values.size() == 1);
  CHECK(g.values[0] == doctest::Approx(eval_polynomial(s, table, 150.25)).epsilon(1e-14));
}

TEST_CASE("two-term grid follows cos(t log 2)/sqrt(2)") {
  const auto spec = make_spec(2.5, 0, 0.5);
  const WeightTable table(spec);
  const auto s = fixed_coefficients(spec, {0.0, 1.0});
  const auto g = eval_grid(s, table, Interval(100.0, 2100.0), 0.013);
  REQUIRE(g.grid.size() > 3 * PhaseSweep::kAnchorPeriod);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.grid.size(); ++i) {
    worst = std::max(worst, std::abs(g.values[i] - std::cos(g.grid[i] * std::log(2.0)) / std::sqrt(2.0)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("grid recurrence agrees with direct evaluation at random points") {
  const auto spec = make_spec(500, 0, 0.5);
  const WeightTable table(spec);
  const auto s = sample_coefficients(spec, 77, 0);
  const Interval iv(500.0, 1000.0);
  const auto g = eval_grid(s, table, iv, 0.01);
  CHECK(g.grid.front() == 500.0);
  CHECK(g.grid.back() <= 1000.0);
  CHECK(g.grid.back() > 1000.0 - 0.01);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, g.grid.size() - 1);
  const double mass = table.l1_mass(s.values);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t j = pick(rng);
    worst = std::max(worst, std::abs(g.values[j] - eval_polynomial(s, table, g.grid[j])));
  }
  CHECK(worst < 1e-9);
  CHECK(worst < 1e-9 * mass);
}

TEST_CASE("grid input validation") {
  const auto spec = make_spec(10, 0, 0.5);
  const auto s = sample_coefficients(spec, 1, 0);
  const WeightTable table(spec);
  CHECK_THROWS_AS(eval_grid(s, table, Interval(0, 1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_grid(s, table, Interval(0, 1), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_grid(s, table, 0.0, 0.1, 0), std::invalid_argument);
}

TEST_CASE("phase sweeps started at different indices agree on overlap") {
  const WeightTable table(make_spec(200, 0, 0.5));
  PhaseSweep from_zero(table.logs(), 3.0, 0.05);
  for (std::size_t i = 0; i < 1000; ++i) from_zero.advance();
  PhaseSweep from_anchor(table.logs(), 3.0, 0.05, 512);
  for (std::size_t i = 512; i < 1000; ++i) from_anchor.advance();
  REQUIRE(from_zero.index() == from_anchor.index());
  for (std::size_t n = 0; n < table.size(); ++n) {
    CHECK(from_zero.cos_values()[n] == from_anchor.cos_values()[n]);
    CHECK(from_zero.sin_values()[n] == from_anchor.sin_values()[n]);
  }
}

TEST_CASE("u_moment examples") {
  const WeightTable t10(make_spec(10, 0, 0.5));
  CHECK(u_moment(t10, 0, 0.0, Part::cosine) == doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));

  const WeightTable t1(make_spec(1.7, 0, 0.5));
  for (int j = 0; j <= 2; ++j) CHECK(u_moment(t1, j, 12.3, Part::sine) == 0.0);

  const WeightTable t100(make_spec(100, 0, 0.5));
  CHECK(std::abs(u_moment(t100, 0, 200.0, Part::cosine)) <= log_moment_sum(100, 0, 0.5));

  CHECK_THROWS_AS(u_moment(t10, 3, 0.0, Part::cosine), std::invalid_argument);
  CHECK_THROWS_AS(u_moment(t10, -1, 0.0, Part::cosine), std::invalid_argument);
}

TEST_CASE("u_moment sign conventions against finite differences") {
  // u(t) = sum w^2 cos(t log n); u' = -P1(sine), u'' = -P2(cosine).
  const WeightTable table(make_spec(80, 1, 0.5));
  const double h = 1e-4;
  for (double t : {3.1, 57.0, 123.4}) {
    const double up = u_moment(table, 0, t + h, Part::cosine);
    const double u0 = u_moment(table, 0, t, Part::cosine);
    const double um = u_moment(table, 0, t - h, Part::cosine);
    const double d1 = (up - um) / (2 * h);
    const double d2 = (up - 2 * u0 + um) / (h * h);
    const double scale2 = log_moment_sum(80, 4, 0.5);
    CHECK(std::abs(d1 + u_moment(table, 1, t, Part::sine)) < 1e-6 * scale2);
    CHECK(std::abs(d2 + u_moment(table, 2, t, Part::cosine)) < 1e-4 * scale2);
  }
}

TEST_CASE("u_moment at t = 0 is a log moment sum, and bounds it elsewhere") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(-5e3, 5e3);
  for (int k = 0; k <= 2; ++k) {
    for (double sigma : {0.0, 0.5, 0.8}) {
      const double T = 150.5;
      const WeightTable table(make_spec(T, k, sigma));
      for (int j = 0; j <= 2; ++j) {
        const double cap = log_moment_sum(T, j + 2 * k, sigma);
        CHECK(u_moment(table, j, 0.0, Part::cosine) == doctest::Approx(cap).epsilon(1e-14));
        for (int trial = 0; trial < 20; ++trial) {
          const double t = dist(rng);
          CHECK(std::abs(u_moment(table, j, t, Part::cosine)) <= cap * (1 + 1e-14));
          CHECK(std::abs(u_moment(table, j, t, Part::sine)) <= cap * (1 + 1e-14));
        }
      }
    }
  }
}

TEST_CASE("log_moment_sum examples") {
  CHECK(log_moment_sum(10, 0, 0.5) == doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));
  CHECK(log_moment_sum(2.5, 1, 0.5) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-15));
  // H_N - log N = gamma + 1/(2N) - 1/(12 N^2) + ...
  const double euler_gamma = 0.57721566490153286;
  CHECK(std::abs(log_moment_sum(1e4, 0, 0.5) - std::log(1e4) - euler_gamma) < 1e-4);
  CHECK(log_moment_sum(1e4, 0, 0.5) - std::log(1e4) ==
        doctest::Approx(euler_gamma + 1.0 / 2e4 - 1.0 / 12e8).epsilon(1e-12));
  CHECK_THROWS_AS(log_moment_sum(10, -1, 0.5), std::invalid_argument);
}
