#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "dirichlet_roots/core.hpp"
#include "dirichlet_roots/dirichlet_eval.hpp"
#include "dirichlet_roots/oscillatory_quadrature.hpp"

namespace dirichlet_roots {

/// Kac-Rice integrand at one point, with the normalized fluctuation terms.
///
/// With f_n(t) = w_n trig(t log n):
///   B = sum f_n^2,  A = sum f_n'^2,  C = (sum f_n f_n') / B
///   discriminant = A/B - C^2 (>= 0 up to roundoff, by Cauchy-Schwarz)
///   density = sqrt(max(discriminant, 0)) / pi
///
/// Writing L = log T, a = 2k + 1, b = 2k + 3:
///   x = a (2B) / L^a - 1,  y = b (2A) / L^b - 1,  z = b C^2 / (a L^2)
///   w = (1 + y) / (1 + x) - 1 - z
/// so that discriminant = (a / b) L^2 (1 + w) holds exactly. The moment sums
/// inside 2B and 2A are exact, so x carries gamma_{2k}, and y gamma_{2k+2},
/// through the Stieltjes expansion of sum (log n)^j / n rather than through
/// hard-coded constants. The normalization is the natural one for sigma = 1/2.
struct DensityBreakdown {
  double t = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;
  double discriminant = 0.0;
  double density = 0.0;
};

/// Thrown when the deterministic rule would exceed its node budget.
class QuadratureBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QuadratureMethod { composite_deterministic, stratified_random };
std::string_view to_string(QuadratureMethod method) noexcept;

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  QuadratureMethod method = QuadratureMethod::composite_deterministic;
  std::size_t nodes_used = 0;
  double stderr_estimate = 0.0;  // stratified only
};

/// Holds the weight table and its exact moments; evaluates the density at t.
class DensityEvaluator {
 public:
  /// Throws std::invalid_argument for degenerate (identically zero) specs.
  explicit DensityEvaluator(const PolynomialSpec& spec);
  explicit DensityEvaluator(WeightTable table);

  [[nodiscard]] const WeightTable& table() const noexcept { return table_; }

  /// sum w_n^2 (log n)^j for j = 0, 1, 2.
  [[nodiscard]] double moment(int j) const { return moments_.at(static_cast<std::size_t>(j)); }

  /// Sums f_n^2, f_n'^2 and f_n f_n' directly, so there is no cancellation
  /// against the moments when t is near 0.
  [[nodiscard]] DensityBreakdown at(double t) const;

  /// Same, from covariance sums already evaluated at 2t.
  /// Throws std::domain_error when B <= 0 (all terms vanish at t).
  [[nodiscard]] DensityBreakdown from_sums(double t, const OscillatorySums& sums) const;

 private:
  [[nodiscard]] DensityBreakdown assemble(double t, double two_b, double two_a, double two_cross) const;

  WeightTable table_;
  std::array<double, 3> moments_{};
};

DensityBreakdown density_at(const PolynomialSpec& spec, double t);

struct DeterministicOptions {
  /// Cap on coarse + refined Gauss-Legendre nodes.
  std::size_t node_budget = 1'500'000;
  /// 0 means default_panel_count.
  std::size_t panels = 0;
  unsigned threads = 0;
};

/// Composite 8-point Gauss-Legendre over panels of width <= pi / (4 log T).
/// The integral is recomputed with halved panels; value is the refined
/// result and abs_error_estimate the difference between the two.
/// Throws QuadratureBudgetExceeded when nodes would exceed the budget.
QuadratureResult expected_count_deterministic(const PolynomialSpec& spec, const Interval& interval,
                                              const DeterministicOptions& options = {});

/// Unbiased estimate: one uniform point per equal stratum. The standard error
/// pairs adjacent strata, Var ~ h^2 sum_pairs (f_2p - f_2p+1)^2.
/// Requires strata >= 100.
QuadratureResult expected_count_stratified(const PolynomialSpec& spec, const Interval& interval,
                                           std::size_t strata, std::uint64_t seed,
                                           unsigned threads = 0);

/// Nodes the deterministic method would use (coarse + refined).
std::size_t deterministic_node_count(const PolynomialSpec& spec, const Interval& interval);

}  // namespace dirichlet_roots
