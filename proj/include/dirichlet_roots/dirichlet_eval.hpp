#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dirichlet_roots/core.hpp"

namespace dirichlet_roots {

/// Per-spec amplitudes, computed once and shared read-only across trials.
///   logs[i]            = log(n),               n = i + 1
///   weights[i]         = (log n)^k / n^sigma
///   squared_weights[i] = weights[i]^2
class WeightTable {
 public:
  explicit WeightTable(const PolynomialSpec& spec);

  [[nodiscard]] const PolynomialSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t size() const noexcept { return logs_.size(); }
  [[nodiscard]] std::span<const double> logs() const noexcept { return logs_; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
  [[nodiscard]] std::span<const double> squared_weights() const noexcept { return squared_; }

  /// Copy with every weight multiplied by factor (> 0).
  [[nodiscard]] WeightTable scaled(double factor) const;

  /// sum_n |X_n| w_n, the natural scale of |S(t)|.
  [[nodiscard]] double l1_mass(std::span<const double> coefficients) const;
  /// sum_n |X_n| w_n log n, a Lipschitz constant for S.
  [[nodiscard]] double lipschitz_bound(std::span<const double> coefficients) const;

 private:
  PolynomialSpec spec_;
  std::vector<double> logs_;
  std::vector<double> weights_;
  std::vector<double> squared_;
};

/// Tracks z_n = exp(i t_j f_n) along the uniform grid t_j = start + j * step.
///
/// Each advance multiplies by the precomputed rotation exp(i step f_n). At
/// every index divisible by kAnchorPeriod the phases are recomputed directly
/// from t_j, which resets both modulus and angle drift. Anchors sit at fixed
/// indices, so two sweeps over the same grid agree bit-for-bit wherever they
/// overlap, whatever index they started from.
class PhaseSweep {
 public:
  static constexpr std::size_t kAnchorPeriod = 512;

  PhaseSweep(std::span<const double> frequencies, double start, double step,
             std::size_t first_index = 0);

  void advance();

  [[nodiscard]] std::size_t index() const noexcept { return index_; }
  [[nodiscard]] double t() const noexcept { return t_at(index_); }
  [[nodiscard]] double t_at(std::size_t j) const noexcept {
    return start_ + static_cast<double>(j) * step_;
  }
  [[nodiscard]] std::span<const double> cos_values() const noexcept { return re_; }
  [[nodiscard]] std::span<const double> sin_values() const noexcept { return im_; }

 private:
  void anchor();

  std::span<const double> freqs_;
  double start_;
  double step_;
  std::size_t index_;
  std::vector<double> rot_re_, rot_im_;
  std::vector<double> re_, im_;
};

struct GridEvaluation {
  std::vector<double> grid;
  std::vector<double> values;
  double step = 0.0;
};

/// S(t) = sum_n X_n w_n trig(t log n), compensated summation.
/// Throws std::invalid_argument when sample and table specs differ.
double eval_polynomial(const CoefficientSample& sample, const WeightTable& table, double t);

/// S on t_i = lo + i * step for every t_i in [lo, hi] (first point lo).
GridEvaluation eval_grid(const CoefficientSample& sample, const WeightTable& table,
                         const Interval& interval, double step);

/// S on exactly `count` points start + i * step.
GridEvaluation eval_grid(const CoefficientSample& sample, const WeightTable& table, double start,
                         double step, std::size_t count);

/// P_j(t) = sum_n w_n^2 (log n)^j trig(t log n), j in {0, 1, 2}.
///
/// With the cosine sum u(t) = sum_n w_n^2 cos(t log n):
///   u(t)   =  u_moment(j = 0, cosine)
///   u'(t)  = -u_moment(j = 1, sine)
///   u''(t) = -u_moment(j = 2, cosine)
double u_moment(const WeightTable& table, int j, double t, Part part);

/// sum_{n <= T} (log n)^m / n^{2 sigma}, by direct compensated summation.
double log_moment_sum(double T, int m, double sigma);

}  // namespace dirichlet_roots
