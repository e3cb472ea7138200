#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dirichlet_roots/asymptotics.hpp"
#include "doctest.h"

using namespace dirichlet_roots;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// gamma_m by Euler-Maclaurin on f(x) = (log x)^m / x, cut at N:
//   gamma_m = sum_{n<N} f(n) + f(N)/2 - (log N)^{m+1}/(m+1)
//             - sum_j B_2j/(2j)! f^(2j-1)(N)
// f^(d)(x) = sum_i c[d][i] (log x)^i / x^(d+1), built by differentiating term by term.
double stieltjes_oracle(int m) {
  const int N = 100;
  const int terms = 15;
  const int max_d = 2 * terms;
  std::vector<std::vector<Big>> c(max_d + 1, std::vector<Big>(m + 1, Big(0)));
  c[0][m] = 1;
  for (int d = 0; d < max_d; ++d) {
    for (int i = 0; i <= m; ++i) {
      if (c[d][i] == 0) continue;
      if (i > 0) c[d + 1][i - 1] += i * c[d][i];
      c[d + 1][i] -= (d + 1) * c[d][i];
    }
  }
  const Big n_big = N;
  const Big logn = log(n_big);
  const auto derivative_at_N = [&](int d) {
    Big acc = 0;
    for (int i = 0; i <= m; ++i) acc += c[d][i] * pow(logn, i);
    return acc / pow(n_big, d + 1);
  };

  Big sum = 0;
  for (int n = 2; n < N; ++n) sum += pow(log(Big(n)), m) / n;
  if (m == 0) sum += 1;
  sum += derivative_at_N(0) / 2;
  sum -= pow(logn, m + 1) / (m + 1);
  Big factorial = 1;
  for (int j = 1; j <= terms; ++j) {
    factorial *= (2 * j - 1) * (2 * j);
    sum -= boost::math::bernoulli_b2n<Big>(j) / factorial * derivative_at_N(2 * j - 1);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("Stieltjes table against an Euler-Maclaurin oracle") {
  CHECK(stieltjes_constant(0) == doctest::Approx(std::numbers::egamma).epsilon(1e-16));
  for (int m = 0; m <= kMaxStieltjesIndex; ++m) {
    CAPTURE(m);
    const double oracle = stieltjes_oracle(m);
    CHECK(std::abs(stieltjes_constant(m) - oracle) <= 1e-14 * std::max(1.0, std::abs(oracle)));
  }
  const auto table = stieltjes_table(5);
  REQUIRE(table.values.size() == 6);
  CHECK(table.values[3] == stieltjes_constant(3));
  CHECK_THROWS_AS(stieltjes_constant(-1), std::out_of_range);
  CHECK_THROWS_AS(stieltjes_constant(kMaxStieltjesIndex + 1), std::out_of_range);
}

TEST_CASE("two-term prediction values") {
  // Reference values from 30-digit arithmetic.
  const auto p0 = predict_expected_zeros(1000, 0);
  CHECK(p0.main_term == doctest::Approx(1269.48169593509153).epsilon(1e-13));
  CHECK(p0.second_term == doctest::Approx(-53.0392791583862290).epsilon(1e-13));
  CHECK(p0.total == doctest::Approx(p0.main_term + p0.second_term).epsilon(1e-15));
  CHECK(p0.error_scale == doctest::Approx(1000 / std::log(1000.0)).epsilon(1e-15));
  CHECK(p0.k == 0);

  const auto p1 = predict_expected_zeros(1000, 1);
  CHECK(p1.main_term == doctest::Approx(1703.18842098154987).epsilon(1e-13));
  CHECK(p1.second_term == doctest::Approx(0.0751074780162396428).epsilon(1e-12));

  const auto p2 = predict_expected_zeros(2000, 2);
  CHECK(p2.main_term == doctest::Approx(4089.60407143683681).epsilon(1e-13));
  CHECK(p2.second_term == doctest::Approx(-0.000937103486719273).epsilon(1e-12));

  CHECK_THROWS_AS(predict_expected_zeros(1.5, 0), std::invalid_argument);
  CHECK_THROWS(predict_expected_zeros(100, 9));
  CHECK_THROWS_AS(predict_expected_zeros(100, -1), std::invalid_argument);
}

TEST_CASE("leading coefficient grows with k toward 1/pi") {
  double previous = 0.0;
  for (int k = 0; k <= 8; ++k) {
    const double c = predict_expected_zeros(500, k).main_term / (500 * std::log(500.0));
    CHECK(c > previous);
    CHECK(c < 1 / std::numbers::pi);
    previous = c;
  }
}

TEST_CASE("zeta zero count main terms") {
  const double two_pi = 2 * std::numbers::pi;
  CHECK(std::abs(zeta_zero_count(two_pi * std::numbers::e)) < 1e-13);
  CHECK(zeta_zero_count(two_pi) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(zeta_zero_count(1e4) == doctest::Approx(10142.090347526813).epsilon(1e-14));
}

TEST_CASE("model-to-zeta ratio") {
  const double base = model_vs_zeta_ratio(1000, 0, 1000.0);
  CHECK(base == doctest::Approx(1000.0 / (zeta_zero_count(2000) - zeta_zero_count(1000))).epsilon(1e-15));
  CHECK(model_vs_zeta_ratio(1000, 0, 2500.0) == doctest::Approx(2.5 * base).epsilon(1e-15));
  CHECK_THROWS_AS(model_vs_zeta_ratio(99, 0, 1.0), std::invalid_argument);
}

TEST_CASE("Stieltjes partial-sum residuals") {
  for (int m = 0; m <= 2; ++m) {
    CAPTURE(m);
    const auto small = stieltjes_sum_check(1e3, m);
    const auto large = stieltjes_sum_check(1e4, m);
    // Leading Euler-Maclaurin correction at an integer cutoff is f(T)/2.
    CHECK(small.residual == doctest::Approx(std::pow(std::log(1e3), m) / 2e3).epsilon(0.01));
    CHECK(large.residual == doctest::Approx(std::pow(std::log(1e4), m) / 2e4).epsilon(0.01));
    CHECK(std::abs(small.residual) <= 10 * small.envelope);
    CHECK(std::abs(large.residual) <= 10 * large.envelope);
    CHECK(small.constant == doctest::Approx(std::abs(small.residual) / small.envelope));
    const double shrink = std::abs(small.residual) / std::abs(large.residual);
    CHECK(shrink >= 5.0);
    CHECK(shrink <= 20.0);
  }
  CHECK(std::abs(stieltjes_sum_check(1e4, 0).residual) <= 2e-4);
}
