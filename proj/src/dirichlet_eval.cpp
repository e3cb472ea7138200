#include "dirichlet_roots/dirichlet_eval.hpp"

#include <cmath>
#include <stdexcept>

#include "dirichlet_roots/compensated_sum.hpp"

namespace dirichlet_roots {
namespace {

void require_same_spec(const CoefficientSample& sample, const WeightTable& table) {
  if (!(sample.spec == table.spec()) || sample.values.size() != table.size()) {
    throw std::invalid_argument("coefficient sample and weight table describe different specs");
  }
}

double int_power(double base, int exponent) noexcept {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

WeightTable::WeightTable(const PolynomialSpec& spec) : spec_(spec) {
  const std::size_t n_terms = spec.terms();
  logs_.resize(n_terms);
  weights_.resize(n_terms);
  squared_.resize(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    const double n = static_cast<double>(i + 1);
    logs_[i] = std::log(n);
    weights_[i] = int_power(logs_[i], spec.derivative_order()) * std::pow(n, -spec.sigma());
    squared_[i] = weights_[i] * weights_[i];
  }
}

WeightTable WeightTable::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("weight scale factor must be finite and positive");
  }
  WeightTable copy = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    copy.weights_[i] *= factor;
    copy.squared_[i] = copy.weights_[i] * copy.weights_[i];
  }
  return copy;
}

double WeightTable::l1_mass(std::span<const double> coefficients) const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < size(); ++i) acc.add(std::abs(coefficients[i]) * weights_[i]);
  return acc.value();
}

double WeightTable::lipschitz_bound(std::span<const double> coefficients) const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < size(); ++i) {
    acc.add(std::abs(coefficients[i]) * weights_[i] * logs_[i]);
  }
  return acc.value();
}

PhaseSweep::PhaseSweep(std::span<const double> frequencies, double start, double step,
                       std::size_t first_index)
    : freqs_(frequencies),
      start_(start),
      step_(step),
      index_(first_index),
      rot_re_(frequencies.size()),
      rot_im_(frequencies.size()),
      re_(frequencies.size()),
      im_(frequencies.size()) {
  for (std::size_t n = 0; n < freqs_.size(); ++n) {
    rot_re_[n] = std::cos(step * freqs_[n]);
    rot_im_[n] = std::sin(step * freqs_[n]);
  }
  anchor();
}

void PhaseSweep::anchor() {
  const double t = t_at(index_);
  for (std::size_t n = 0; n < freqs_.size(); ++n) {
    re_[n] = std::cos(t * freqs_[n]);
    im_[n] = std::sin(t * freqs_[n]);
  }
}

void PhaseSweep::advance() {
  ++index_;
  if (index_ % kAnchorPeriod == 0) {
    anchor();
    return;
  }
  const std::size_t count = freqs_.size();
  double* re = re_.data();
  double* im = im_.data();
  const double* rr = rot_re_.data();
  const double* ri = rot_im_.data();
  for (std::size_t n = 0; n < count; ++n) {
    const double a = re[n];
    const double b = im[n];
    re[n] = a * rr[n] - b * ri[n];
    im[n] = a * ri[n] + b * rr[n];
  }
}

double eval_polynomial(const CoefficientSample& sample, const WeightTable& table, double t) {
  require_same_spec(sample, table);
  const auto logs = table.logs();
  const auto weights = table.weights();
  const bool cosine = table.spec().part() == Part::cosine;
  CompensatedSum acc;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double angle = t * logs[i];
    acc.add(sample.values[i] * weights[i] * (cosine ? std::cos(angle) : std::sin(angle)));
  }
  return acc.value();
}

GridEvaluation eval_grid(const CoefficientSample& sample, const WeightTable& table, double start,
                         double step, std::size_t count) {
  require_same_spec(sample, table);
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be > 0");
  if (count == 0) throw std::invalid_argument("grid must contain at least one point");

  const std::size_t n_terms = table.size();
  std::vector<double> amplitude(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) amplitude[i] = sample.values[i] * table.weights()[i];

  GridEvaluation out;
  out.step = step;
  out.grid.resize(count);
  out.values.resize(count);

  PhaseSweep sweep(table.logs(), start, step);
  const bool cosine = table.spec().part() == Part::cosine;
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) sweep.advance();
    const auto trig = cosine ? sweep.cos_values() : sweep.sin_values();
    CompensatedSum acc;
    for (std::size_t i = 0; i < n_terms; ++i) acc.add(amplitude[i] * trig[i]);
    out.grid[j] = sweep.t();
    out.values[j] = acc.value();
  }
  return out;
}

GridEvaluation eval_grid(const CoefficientSample& sample, const WeightTable& table,
                         const Interval& interval, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be > 0");
  // Tolerate last-ulp shortfall so hi itself is included when it lies on the grid.
  const double cells = interval.length() / step;
  const auto count = static_cast<std::size_t>(std::floor(cells * (1.0 + 1e-12))) + 1;
  return eval_grid(sample, table, interval.lo(), step, count);
}

double u_moment(const WeightTable& table, int j, double t, Part part) {
  if (j < 0 || j > 2) throw std::invalid_argument("u_moment index j must be 0, 1 or 2");
  const auto logs = table.logs();
  const auto sq = table.squared_weights();
  CompensatedSum acc;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double angle = t * logs[i];
    const double trig = part == Part::cosine ? std::cos(angle) : std::sin(angle);
    acc.add(sq[i] * int_power(logs[i], j) * trig);
  }
  return acc.value();
}

double log_moment_sum(double T, int m, double sigma) {
  if (m < 0) throw std::invalid_argument("log moment order must be >= 0");
  const auto n_terms = static_cast<std::size_t>(std::floor(T));
  CompensatedSum acc;
  for (std::size_t i = 1; i <= n_terms; ++i) {
    const double n = static_cast<double>(i);
    acc.add(int_power(std::log(n), m) * std::pow(n, -2.0 * sigma));
  }
  return acc.value();
}

}  // namespace dirichlet_roots
