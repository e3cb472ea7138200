#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dirichlet_roots/core.hpp"
#include "dirichlet_roots/dirichlet_eval.hpp"

namespace dirichlet_roots {

/// Zero count of one realization on an interval.
struct RootCountResult {
  std::uint64_t trial_index = 0;
  std::size_t count = 0;
  bool roots_retained = false;
  std::vector<double> roots;  ///< ascending, only when roots_retained
  double grid_step = 0.0;
  /// |S(r)| bound met by every refined root r: Lipschitz(S) * refine_tol + zero threshold.
  double value_tolerance = 0.0;
  /// Set when the step exceeds half of the mean zero spacing.
  bool coarse_step_warning = false;
};

struct TrialAggregate {
  std::size_t trials = 0;
  double mean = 0.0;
  double stderr_estimate = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
  std::vector<std::size_t> per_trial_counts;
  double grid_step = 0.0;
};

/// pi / sqrt(M2 / M0) with M_j = sum w_n^2 (log n)^j: the mean spacing of
/// zeros implied by the non-oscillating part of the Kac-Rice density. For
/// sigma = 1/2 this is pi sqrt((2k+3)/(2k+1)) / log T to leading order.
/// Infinite when M2 = 0 (constant polynomial).
double mean_zero_spacing(const WeightTable& table);

/// One sixteenth of mean_zero_spacing, capped at a sixteenth of the interval.
double default_grid_step(const WeightTable& table, const Interval& interval);

/// Counts sign changes of S on a uniform grid over the interval (hi is always
/// evaluated). A grid value with |S| < 1e-13 * sum|X_n| w_n is an exact zero;
/// a run of such values counts once and belongs to the cell on its left.
/// With keep_roots each bracket is bisected down to refine_tol; the count
/// does not depend on refinement.
RootCountResult count_roots(const CoefficientSample& sample, const WeightTable& table,
                            const Interval& interval, double step, double refine_tol,
                            bool keep_roots = true);

/// Runs `trials` independent realizations (sample_coefficients(spec, seed, i))
/// and aggregates their zero counts. step <= 0 selects default_grid_step.
/// Output is identical for every thread count.
TrialAggregate run_trials(const PolynomialSpec& spec, const Interval& interval, std::size_t trials,
                          std::uint64_t master_seed, double step = 0.0, unsigned threads = 0);

struct SigmaSweepRow {
  double sigma = 0.0;
  double mean = 0.0;
  double stderr_estimate = 0.0;
  double per_t_log_t = 0.0;  ///< mean / (T log T)
};

/// run_trials on [T, 2T] for k = 0, cosine part, at each sigma.
std::vector<SigmaSweepRow> sigma_sweep(double T, const std::vector<double>& sigmas,
                                       std::size_t trials, std::uint64_t seed,
                                       unsigned threads = 0);

}  // namespace dirichlet_roots
