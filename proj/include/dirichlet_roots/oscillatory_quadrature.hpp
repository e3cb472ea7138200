#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dirichlet_roots/core.hpp"
#include "dirichlet_roots/dirichlet_eval.hpp"

namespace dirichlet_roots {

/// Covariance sums of the weight table at the doubled argument 2t.
struct OscillatorySums {
  double cos0 = 0.0;  ///< sum w_n^2 cos(2t log n)
  double sin1 = 0.0;  ///< sum w_n^2 log n sin(2t log n)
  double cos2 = 0.0;  ///< sum w_n^2 (log n)^2 cos(2t log n)
};

/// Direct evaluation, one sin/cos pair per term.
OscillatorySums oscillatory_sums(const WeightTable& table, double t);

inline constexpr std::size_t kNodesPerPanel = 8;

/// Gauss-Legendre nodes mapped to [0, 1] with weights summing to 1.
struct UnitRule {
  std::array<double, kNodesPerPanel> nodes;
  std::array<double, kNodesPerPanel> weights;
};
const UnitRule& gauss_legendre_unit_rule();

/// Panel count giving width at most pi / (4 log T) over the interval, i.e. at
/// least four panels per period of cos(2t log T).
std::size_t default_panel_count(const PolynomialSpec& spec, const Interval& interval);

/// Receives t and the covariance sums at 2t; writes one value per component.
using PanelIntegrand =
    std::function<void(double t, const OscillatorySums& sums, std::span<double> out)>;

/// Composite Gauss-Legendre integration of `components` integrands over
/// `panels` equal panels. Panel sums come from a PhaseSweep over panel starts
/// (frequencies 2 log n) rotated to each node, so there are no trig calls in
/// the inner loop. Panels are independent work items and are reduced with a
/// fixed pairwise tree: the result does not depend on `threads`.
std::vector<double> integrate_panels(const WeightTable& table, const Interval& interval,
                                     std::size_t panels, std::size_t components,
                                     const PanelIntegrand& integrand, unsigned threads = 0);

}  // namespace dirichlet_roots
