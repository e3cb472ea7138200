#include "dirichlet_roots/kac_rice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dirichlet_roots/compensated_sum.hpp"
#include "dirichlet_roots/parallel.hpp"

namespace dirichlet_roots {
namespace {

double int_power(double base, int exponent) noexcept {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

std::string_view to_string(QuadratureMethod method) noexcept {
  return method == QuadratureMethod::composite_deterministic ? "composite_deterministic"
                                                             : "stratified_random";
}

DensityEvaluator::DensityEvaluator(const PolynomialSpec& spec) : DensityEvaluator(WeightTable(spec)) {}

DensityEvaluator::DensityEvaluator(WeightTable table) : table_(std::move(table)) {
  if (table_.spec().degenerate()) {
    throw std::invalid_argument("spec is identically zero; its zero set is not discrete");
  }
  std::array<CompensatedSum, 3> acc;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const double L = table_.logs()[i];
    const double sq = table_.squared_weights()[i];
    acc[0].add(sq);
    acc[1].add(sq * L);
    acc[2].add(sq * L * L);
  }
  for (std::size_t j = 0; j < 3; ++j) moments_[j] = acc[j].value();
}

DensityBreakdown DensityEvaluator::at(double t) const {
  const bool cosine = table_.spec().part() == Part::cosine;
  CompensatedSum b, a, cross;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const double L = table_.logs()[i];
    const double c = std::cos(t * L);
    const double s = std::sin(t * L);
    const double f = table_.weights()[i] * (cosine ? c : s);
    const double df = table_.weights()[i] * L * (cosine ? -s : c);
    b.add(f * f);
    a.add(df * df);
    cross.add(f * df);
  }
  return assemble(t, 2.0 * b.value(), 2.0 * a.value(), 2.0 * cross.value());
}

DensityBreakdown DensityEvaluator::from_sums(double t, const OscillatorySums& sums) const {
  // cos^2 = (1 + cos 2u)/2, sin^2 = (1 - cos 2u)/2, sin cos = sin 2u / 2.
  // The sine part swaps the roles of cos^2 and sin^2 and flips the cross term.
  const double sign = table_.spec().part() == Part::cosine ? 1.0 : -1.0;
  const double two_b = moments_[0] + sign * sums.cos0;
  const double two_a = moments_[2] - sign * sums.cos2;
  const double two_cross = -sign * sums.sin1;
  return assemble(t, two_b, two_a, two_cross);
}

DensityBreakdown DensityEvaluator::assemble(double t, double two_b, double two_a,
                                            double two_cross) const {
  if (!(two_b > 0.0)) {
    throw std::domain_error("Kac-Rice denominator vanishes at t = " + std::to_string(t));
  }

  DensityBreakdown d;
  d.t = t;
  d.B = 0.5 * two_b;
  d.A = 0.5 * two_a;
  d.C = two_cross / two_b;
  d.discriminant = d.A / d.B - d.C * d.C;
  d.density = std::sqrt(std::max(d.discriminant, 0.0)) / std::numbers::pi;

  const int k = table_.spec().derivative_order();
  const double log_t = std::log(table_.spec().cutoff());
  const double a = 2.0 * k + 1.0;
  const double b = 2.0 * k + 3.0;
  d.x = a * two_b / int_power(log_t, 2 * k + 1) - 1.0;
  d.y = b * two_a / int_power(log_t, 2 * k + 3) - 1.0;
  d.z = b * d.C * d.C / (a * log_t * log_t);
  d.w = (1.0 + d.y) / (1.0 + d.x) - 1.0 - d.z;
  return d;
}

DensityBreakdown density_at(const PolynomialSpec& spec, double t) {
  return DensityEvaluator(spec).at(t);
}

std::size_t deterministic_node_count(const PolynomialSpec& spec, const Interval& interval) {
  return 3 * kNodesPerPanel * default_panel_count(spec, interval);
}

QuadratureResult expected_count_deterministic(const PolynomialSpec& spec, const Interval& interval,
                                              const DeterministicOptions& options) {
  const DensityEvaluator evaluator(spec);
  const std::size_t coarse = options.panels > 0 ? options.panels : default_panel_count(spec, interval);
  const std::size_t nodes = 3 * kNodesPerPanel * coarse;
  if (nodes > options.node_budget) {
    throw QuadratureBudgetExceeded(
        "deterministic quadrature needs " + std::to_string(nodes) + " nodes (budget " +
        std::to_string(options.node_budget) + "); use the stratified method for this T");
  }

  const PanelIntegrand integrand = [&](double t, const OscillatorySums& sums, std::span<double> out) {
    out[0] = evaluator.from_sums(t, sums).density;
  };
  const double rough =
      integrate_panels(evaluator.table(), interval, coarse, 1, integrand, options.threads)[0];
  const double fine =
      integrate_panels(evaluator.table(), interval, 2 * coarse, 1, integrand, options.threads)[0];

  QuadratureResult result;
  result.value = fine;
  result.abs_error_estimate = std::abs(fine - rough);
  result.method = QuadratureMethod::composite_deterministic;
  result.nodes_used = nodes;
  return result;
}

QuadratureResult expected_count_stratified(const PolynomialSpec& spec, const Interval& interval,
                                           std::size_t strata, std::uint64_t seed,
                                           unsigned threads) {
  if (strata < 100) throw std::invalid_argument("stratified quadrature needs at least 100 strata");
  const DensityEvaluator evaluator(spec);
  const double width = interval.length() / static_cast<double>(strata);

  std::vector<double> samples(strata);
  parallel_for(strata, threads, [&](std::size_t s) {
    const double t = interval.lo() + (static_cast<double>(s) + uniform_at(seed, s)) * width;
    samples[s] = evaluator.at(t).density;
  });

  std::vector<double> squared_gaps;
  squared_gaps.reserve(strata / 2 + 1);
  for (std::size_t s = 0; s + 1 < strata; s += 2) {
    const double gap = samples[s] - samples[s + 1];
    squared_gaps.push_back(gap * gap);
  }
  if (strata % 2 == 1) {
    // The unpaired last stratum borrows its neighbour; its variance counts once.
    const double gap = samples[strata - 1] - samples[strata - 2];
    squared_gaps.push_back(0.5 * gap * gap);
  }

  QuadratureResult result;
  result.value = width * pairwise_total(samples);
  result.stderr_estimate = width * std::sqrt(pairwise_total(squared_gaps));
  result.abs_error_estimate = 3.0 * result.stderr_estimate;
  result.method = QuadratureMethod::stratified_random;
  result.nodes_used = strata;
  return result;
}

}  // namespace dirichlet_roots
