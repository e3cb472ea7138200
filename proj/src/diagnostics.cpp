#include "dirichlet_roots/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dirichlet_roots/asymptotics.hpp"
#include "dirichlet_roots/compensated_sum.hpp"
#include "dirichlet_roots/dirichlet_eval.hpp"
#include "dirichlet_roots/kac_rice.hpp"
#include "dirichlet_roots/oscillatory_quadrature.hpp"
#include "dirichlet_roots/parallel.hpp"

namespace dirichlet_roots {

std::vector<StepReport> proof_step_integrals(const PolynomialSpec& spec, unsigned threads) {
  if (spec.derivative_order() != 0 || spec.sigma() != 0.5 || spec.part() != Part::cosine) {
    throw std::invalid_argument("proof step integrals are defined for k = 0, sigma = 1/2, cosine");
  }
  if (spec.cutoff() > 5000.0 || spec.cutoff() < 2.0) {
    throw std::invalid_argument("proof step integrals need 2 <= T <= 5000");
  }

  const DensityEvaluator evaluator(spec);
  const Interval interval = Interval::dyadic(spec);
  const PanelIntegrand integrand = [&](double t, const OscillatorySums& sums,
                                       std::span<double> out) {
    const DensityBreakdown d = evaluator.from_sums(t, sums);
    const double x2 = d.x * d.x;
    const double y2 = d.y * d.y;
    out[0] = -d.x;
    out[1] = d.y;
    out[2] = d.x * d.y;
    out[3] = d.z;
    out[4] = x2;
    out[5] = std::abs(d.y) * x2;
    out[6] = x2 * x2;
    out[7] = x2 * y2;
    out[8] = y2 * x2 * x2;
  };
  const std::vector<double> integrals = integrate_panels(
      evaluator.table(), interval, default_panel_count(spec, interval), 9, integrand, threads);

  const double T = spec.cutoff();
  const double L = std::log(T);
  const double scales[9] = {
      stieltjes_constant(0) * T / L,     T / std::pow(L, 3),
      T / std::pow(L, 4),                T / std::pow(L, 4),
      T / std::pow(L, 2),                T / std::pow(L, 5.0 - 4.0 / 3.0),
      T / std::pow(L, 4.0 - 4.0 / 3.0),  T / std::pow(L, 4),
      T / std::pow(L, 6.0 - 4.0 / 3.0),
  };

  std::vector<StepReport> reports;
  for (int i = 0; i < 9; ++i) {
    StepReport r;
    r.step_id = i + 1;
    r.integral_value = integrals[static_cast<std::size_t>(i)];
    r.bound_scale = scales[i];
    r.observed_ratio = std::abs(r.integral_value) / r.bound_scale;
    reports.push_back(r);
  }
  return reports;
}

std::vector<std::complex<double>> log_power_coefficients(std::size_t N, int k) {
  std::vector<std::complex<double>> a(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double n = static_cast<double>(i + 1);
    a[i] = std::pow(std::log(n), k) / n;
  }
  return a;
}

MeanValueCheck l2_mean_value_check(std::span<const std::complex<double>> coefficients, double T,
                                   unsigned threads) {
  const std::size_t N = coefficients.size();
  if (N == 0) throw std::invalid_argument("mean value check needs at least one coefficient");
  if (N > 1000) throw std::invalid_argument("mean value check supports at most 1000 coefficients");
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be positive");

  std::vector<double> logs(N);
  for (std::size_t i = 0; i < N; ++i) logs[i] = std::log(static_cast<double>(i + 1));

  std::size_t panels = 1;
  if (N > 1) {
    const double width = std::numbers::pi / (4.0 * logs.back());
    panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(T / width)));
  }
  const double width = T / static_cast<double>(panels);
  const UnitRule& rule = gauss_legendre_unit_rule();

  std::vector<double> panel_values(panels);
  parallel_for(panels, threads, [&](std::size_t p) {
    double panel = 0.0;
    for (std::size_t j = 0; j < kNodesPerPanel; ++j) {
      const double t = (static_cast<double>(p) + rule.nodes[j]) * width;
      CompensatedSum re, im;
      for (std::size_t i = 0; i < N; ++i) {
        const std::complex<double> term = coefficients[i] * std::polar(1.0, t * logs[i]);
        re.add(term.real());
        im.add(term.imag());
      }
      panel += width * rule.weights[j] * std::norm(std::complex<double>(re.value(), im.value()));
    }
    panel_values[p] = panel;
  });

  CompensatedSum mass, budget;
  for (std::size_t i = 0; i < N; ++i) {
    mass.add(std::norm(coefficients[i]));
    budget.add(static_cast<double>(i + 1) * std::norm(coefficients[i]));
  }

  MeanValueCheck check;
  check.lhs = pairwise_total(panel_values);
  check.main = T * mass.value();
  check.error_budget = budget.value();
  check.realized_constant = std::abs(check.lhs - check.main) / check.error_budget;
  return check;
}

SupReport u_sup_monitor(const PolynomialSpec& spec, const Interval& interval,
                        std::size_t gridpoints, unsigned threads) {
  if (gridpoints < 1000) throw std::invalid_argument("u_sup_monitor needs at least 1000 points");
  const WeightTable table(spec);
  const std::size_t n_terms = table.size();

  std::vector<double> freqs(n_terms), c0(n_terms), c1(n_terms), c2(n_terms);
  CompensatedSum cap0, cap1, cap2;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const double L = table.logs()[i];
    freqs[i] = 2.0 * L;
    c0[i] = table.squared_weights()[i];
    c1[i] = c0[i] * L;
    c2[i] = c1[i] * L;
    cap0.add(c0[i]);
    cap1.add(c1[i]);
    cap2.add(c2[i]);
  }

  const double step = interval.length() / static_cast<double>(gridpoints - 1);
  const std::size_t block = PhaseSweep::kAnchorPeriod;
  const std::size_t blocks = (gridpoints + block - 1) / block;
  std::vector<std::array<double, 3>> block_max(blocks, {0.0, 0.0, 0.0});

  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t first = b * block;
    const std::size_t last = std::min(gridpoints, first + block);
    PhaseSweep sweep(freqs, interval.lo(), step, first);
    auto& best = block_max[b];
    for (std::size_t g = first; g < last; ++g) {
      if (g > first) sweep.advance();
      const auto cs = sweep.cos_values();
      const auto sn = sweep.sin_values();
      CompensatedSum u, u1, u2;
      for (std::size_t i = 0; i < n_terms; ++i) {
        u.add(c0[i] * cs[i]);
        u1.add(c1[i] * sn[i]);
        u2.add(c2[i] * cs[i]);
      }
      best[0] = std::max(best[0], std::abs(u.value()));
      best[1] = std::max(best[1], std::abs(u1.value()));
      best[2] = std::max(best[2], std::abs(u2.value()));
    }
  });

  SupReport report;
  for (const auto& m : block_max) {
    report.sup_u = std::max(report.sup_u, m[0]);
    report.sup_u1 = std::max(report.sup_u1, m[1]);
    report.sup_u2 = std::max(report.sup_u2, m[2]);
  }
  const double L = std::log(spec.cutoff());
  report.ratio_u = report.sup_u / std::pow(L, 2.0 / 3.0);
  report.ratio_u1 = report.sup_u1 / std::pow(L, 4.0 / 3.0);
  report.ratio_u2 = report.sup_u2 / (L * L);
  report.cap_u = cap0.value();
  report.cap_u1 = cap1.value();
  report.cap_u2 = cap2.value();
  return report;
}

}  // namespace dirichlet_roots
