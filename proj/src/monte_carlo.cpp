#include "dirichlet_roots/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dirichlet_roots/compensated_sum.hpp"
#include "dirichlet_roots/parallel.hpp"

namespace dirichlet_roots {
namespace {

int sign_of(double value, double zero_threshold) noexcept {
  if (std::abs(value) < zero_threshold) return 0;
  return value > 0.0 ? 1 : -1;
}

}  // namespace

double mean_zero_spacing(const WeightTable& table) {
  CompensatedSum m0, m2;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double L = table.logs()[i];
    m0.add(table.squared_weights()[i]);
    m2.add(table.squared_weights()[i] * L * L);
  }
  if (!(m0.value() > 0.0)) throw std::invalid_argument("spec is identically zero");
  if (!(m2.value() > 0.0)) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / std::sqrt(m2.value() / m0.value());
}

double default_grid_step(const WeightTable& table, const Interval& interval) {
  return std::min(mean_zero_spacing(table), interval.length()) / 16.0;
}

RootCountResult count_roots(const CoefficientSample& sample, const WeightTable& table,
                            const Interval& interval, double step, double refine_tol,
                            bool keep_roots) {
  if (!(refine_tol > 0.0)) throw std::invalid_argument("refine_tol must be > 0");
  GridEvaluation grid = eval_grid(sample, table, interval, step);
  if (grid.grid.back() < interval.hi()) {
    grid.grid.push_back(interval.hi());
    grid.values.push_back(eval_polynomial(sample, table, interval.hi()));
  }

  const double zero_threshold = 1e-13 * table.l1_mass(sample.values);

  RootCountResult result;
  result.trial_index = sample.trial_index;
  result.grid_step = step;
  result.roots_retained = keep_roots;
  result.value_tolerance = refine_tol * table.lipschitz_bound(sample.values) + zero_threshold;
  result.coarse_step_warning = step > 0.5 * mean_zero_spacing(table);

  auto refine = [&](double lo, double f_lo, double hi) {
    while (hi - lo > refine_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double f_mid = eval_polynomial(sample, table, mid);
      if (std::abs(f_mid) < zero_threshold) return mid;
      if ((f_mid > 0.0) == (f_lo > 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  int previous = sign_of(grid.values[0], zero_threshold);
  if (previous == 0) {
    ++result.count;
    if (keep_roots) result.roots.push_back(grid.grid[0]);
  }
  for (std::size_t i = 1; i < grid.values.size(); ++i) {
    const int current = sign_of(grid.values[i], zero_threshold);
    if (current == 0) {
      if (previous != 0) {
        ++result.count;
        if (keep_roots) result.roots.push_back(grid.grid[i]);
      }
    } else if (previous != 0 && current != previous) {
      ++result.count;
      if (keep_roots) {
        result.roots.push_back(refine(grid.grid[i - 1], grid.values[i - 1], grid.grid[i]));
      }
    }
    previous = current;
  }
  return result;
}

TrialAggregate run_trials(const PolynomialSpec& spec, const Interval& interval, std::size_t trials,
                          std::uint64_t master_seed, double step, unsigned threads) {
  if (trials < 2) throw std::invalid_argument("run_trials needs at least 2 trials");
  if (spec.degenerate()) throw std::invalid_argument("spec is identically zero");
  const WeightTable table(spec);
  const double grid_step = step > 0.0 ? step : default_grid_step(table, interval);

  TrialAggregate agg;
  agg.trials = trials;
  agg.grid_step = grid_step;
  agg.per_trial_counts.resize(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    const CoefficientSample sample = sample_coefficients(spec, master_seed, i);
    agg.per_trial_counts[i] =
        count_roots(sample, table, interval, grid_step, 1e-10, /*keep_roots=*/false).count;
  });

  std::vector<double> values(agg.per_trial_counts.begin(), agg.per_trial_counts.end());
  agg.mean = pairwise_total(values) / static_cast<double>(trials);
  for (double& v : values) v = (v - agg.mean) * (v - agg.mean);
  const double variance = pairwise_total(values) / static_cast<double>(trials - 1);
  agg.stderr_estimate = std::sqrt(variance / static_cast<double>(trials));
  const auto [lo, hi] = std::minmax_element(agg.per_trial_counts.begin(), agg.per_trial_counts.end());
  agg.min = *lo;
  agg.max = *hi;
  return agg;
}

std::vector<SigmaSweepRow> sigma_sweep(double T, const std::vector<double>& sigmas,
                                       std::size_t trials, std::uint64_t seed, unsigned threads) {
  std::vector<SigmaSweepRow> rows;
  rows.reserve(sigmas.size());
  for (double sigma : sigmas) {
    const PolynomialSpec spec = make_spec(T, 0, sigma, Part::cosine);
    const TrialAggregate agg = run_trials(spec, Interval::dyadic(spec), trials, seed, 0.0, threads);
    rows.push_back({sigma, agg.mean, agg.stderr_estimate, agg.mean / (T * std::log(T))});
  }
  return rows;
}

}  // namespace dirichlet_roots
