#include "dirichlet_roots/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dirichlet_roots/dirichlet_eval.hpp"

namespace dirichlet_roots {
namespace {

// Validated in tests against an Euler-Maclaurin evaluation in 50-digit
// arithmetic (tests/test_asymptotics.cpp).
constexpr std::array<double, kMaxStieltjesIndex + 1> kStieltjes = {
    0.57721566490153286061,     -0.072815845483676724861,   -0.0096903631928723184845,
    0.0020538344203033458662,   0.0023253700654673000575,   0.00079332381730106270175,
    -0.00023876934543019960987, -0.00052728956705775104607, -0.00035212335380303950960,
    -3.4394774418088048178e-5,  0.00020533281490906479468,  0.00027018443954390352667,
    0.00016727291210514019335,  -2.7463806603760158860e-5,  -0.00020920926205929994584,
    -0.00028346865532024144664, -0.00019969685830896977471,
};

}  // namespace

double stieltjes_constant(int m) {
  if (m < 0 || m > kMaxStieltjesIndex) {
    throw std::out_of_range("Stieltjes constant index " + std::to_string(m) +
                            " outside [0, 16]");
  }
  return kStieltjes[static_cast<std::size_t>(m)];
}

StieltjesTable stieltjes_table(int max_index) {
  StieltjesTable table;
  for (int m = 0; m <= max_index; ++m) table.values.push_back(stieltjes_constant(m));
  return table;
}

AsymptoticPrediction predict_expected_zeros(double T, int k) {
  if (!(T >= 2.0)) throw std::invalid_argument("asymptotic prediction needs T >= 2");
  if (k < 0) throw std::invalid_argument("derivative order k must be >= 0");
  const double log_t = std::log(T);
  const double a = 2.0 * k + 1.0;
  const double b = 2.0 * k + 3.0;

  AsymptoticPrediction p;
  p.k = k;
  p.main_term = std::sqrt(a / b) * T * log_t / std::numbers::pi;
  p.second_term = -stieltjes_constant(2 * k) / (2.0 * std::numbers::pi) * std::sqrt(a * a * a / b) *
                  T / std::pow(log_t, 2 * k);
  p.total = p.main_term + p.second_term;
  p.error_scale = T / std::pow(log_t, 2 * k + 1);
  return p;
}

double zeta_zero_count(double T) {
  const double scaled = T / (2.0 * std::numbers::pi);
  return scaled * std::log(scaled) - scaled;
}

double model_vs_zeta_ratio(double T, int /*k*/, double ek_value) {
  if (!(T >= 100.0)) throw std::invalid_argument("zeta comparison needs T >= 100");
  const double window = zeta_zero_count(2.0 * T) - zeta_zero_count(T);
  if (!(window > 0.0)) throw std::domain_error("zeta zero window is empty");
  return ek_value / window;
}

StieltjesResidual stieltjes_sum_check(double T, int m) {
  if (!(T >= 2.0)) throw std::invalid_argument("Stieltjes sum check needs T >= 2");
  const double log_t = std::log(T);
  StieltjesResidual r;
  r.residual = log_moment_sum(T, m, 0.5) - std::pow(log_t, m + 1) / (m + 1) - stieltjes_constant(m);
  r.envelope = std::pow(log_t, m) / T;
  r.constant = std::abs(r.residual) / r.envelope;
  return r;
}

}  // namespace dirichlet_roots
