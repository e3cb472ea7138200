#include "dirichlet_roots/oscillatory_quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dirichlet_roots/compensated_sum.hpp"
#include "dirichlet_roots/parallel.hpp"

namespace dirichlet_roots {
namespace {

UnitRule build_unit_rule() {
  using Rule = boost::math::quadrature::gauss<double, kNodesPerPanel>;
  // Boost stores the non-negative half of a symmetric rule.
  const auto& abscissa = Rule::abscissa();
  const auto& weight = Rule::weights();
  constexpr std::size_t half = kNodesPerPanel / 2;
  static_assert(kNodesPerPanel % 2 == 0);

  UnitRule rule{};
  for (std::size_t i = 0; i < half; ++i) {
    const double x = abscissa[half - 1 - i];
    const double w = weight[half - 1 - i];
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 0.5 * w;
    rule.nodes[kNodesPerPanel - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[kNodesPerPanel - 1 - i] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const UnitRule& gauss_legendre_unit_rule() {
  static const UnitRule rule = build_unit_rule();
  return rule;
}

OscillatorySums oscillatory_sums(const WeightTable& table, double t) {
  const auto logs = table.logs();
  const auto sq = table.squared_weights();
  CompensatedSum c0, s1, c2;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double angle = 2.0 * t * logs[i];
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    c0.add(sq[i] * c);
    s1.add(sq[i] * logs[i] * s);
    c2.add(sq[i] * logs[i] * logs[i] * c);
  }
  return {c0.value(), s1.value(), c2.value()};
}

std::size_t default_panel_count(const PolynomialSpec& spec, const Interval& interval) {
  const double max_width = std::numbers::pi / (4.0 * std::log(spec.cutoff()));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(interval.length() / max_width)));
}

std::vector<double> integrate_panels(const WeightTable& table, const Interval& interval,
                                     std::size_t panels, std::size_t components,
                                     const PanelIntegrand& integrand, unsigned threads) {
  if (panels == 0) throw std::invalid_argument("panel count must be positive");
  if (components == 0) return {};

  const UnitRule& rule = gauss_legendre_unit_rule();
  const std::size_t n_terms = table.size();
  const double width = interval.length() / static_cast<double>(panels);

  std::vector<double> freqs(n_terms), c0(n_terms), c1(n_terms), c2(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    const double L = table.logs()[i];
    freqs[i] = 2.0 * L;
    c0[i] = table.squared_weights()[i];
    c1[i] = c0[i] * L;
    c2[i] = c1[i] * L;
  }
  // Rotation from a panel start to node j, stored node-minor: [n * nodes + j].
  std::vector<double> node_re(n_terms * kNodesPerPanel), node_im(n_terms * kNodesPerPanel);
  for (std::size_t i = 0; i < n_terms; ++i) {
    for (std::size_t j = 0; j < kNodesPerPanel; ++j) {
      const double angle = freqs[i] * width * rule.nodes[j];
      node_re[i * kNodesPerPanel + j] = std::cos(angle);
      node_im[i * kNodesPerPanel + j] = std::sin(angle);
    }
  }

  std::vector<double> panel_values(panels * components, 0.0);
  const std::size_t block = PhaseSweep::kAnchorPeriod;
  const std::size_t blocks = (panels + block - 1) / block;

  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t first = b * block;
    const std::size_t last = std::min(panels, first + block);
    PhaseSweep sweep(freqs, interval.lo(), width, first);
    std::array<CompensatedSum, kNodesPerPanel> s0, s1, s2;
    std::vector<double> out(components);

    for (std::size_t p = first; p < last; ++p) {
      if (p > first) sweep.advance();
      s0.fill({});
      s1.fill({});
      s2.fill({});
      const auto zr = sweep.cos_values();
      const auto zi = sweep.sin_values();
      for (std::size_t i = 0; i < n_terms; ++i) {
        const double* nr = &node_re[i * kNodesPerPanel];
        const double* ni = &node_im[i * kNodesPerPanel];
        for (std::size_t j = 0; j < kNodesPerPanel; ++j) {
          const double er = zr[i] * nr[j] - zi[i] * ni[j];
          const double ei = zr[i] * ni[j] + zi[i] * nr[j];
          s0[j].add(c0[i] * er);
          s1[j].add(c1[i] * ei);
          s2[j].add(c2[i] * er);
        }
      }

      double* panel = &panel_values[p * components];
      const double start = sweep.t();
      for (std::size_t j = 0; j < kNodesPerPanel; ++j) {
        const OscillatorySums sums{s0[j].value(), s1[j].value(), s2[j].value()};
        std::fill(out.begin(), out.end(), 0.0);
        integrand(start + width * rule.nodes[j], sums, out);
        for (std::size_t c = 0; c < components; ++c) panel[c] += width * rule.weights[j] * out[c];
      }
    }
  });

  std::vector<double> totals(components);
  std::vector<double> column(panels);
  for (std::size_t c = 0; c < components; ++c) {
    for (std::size_t p = 0; p < panels; ++p) column[p] = panel_values[p * components + c];
    totals[c] = pairwise_total(column);
  }
  return totals;
}

}  // namespace dirichlet_roots
