#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dirichlet_roots/core.hpp"

namespace dirichlet_roots {

/// Integral of one fluctuation term of the density expansion over [T, 2T],
/// paired with the envelope it is expected to stay within.
struct StepReport {
  int step_id = 0;
  double integral_value = 0.0;
  double bound_scale = 0.0;
  double observed_ratio = 0.0;  ///< |integral_value| / bound_scale
};

/// Integrates, with the Kac-Rice panel rule and x, y, z from DensityBreakdown:
///   1: -x        envelope gamma T / L      (signed: value ~ -gamma T / L)
///   2: y         T / L^3
///   3: x y       T / L^4
///   4: z         T / L^4
///   5: x^2       T / L^2
///   6: |y| x^2   T / L^(5 - 4/3)
///   7: x^4       T / L^(4 - 4/3)
///   8: x^2 y^2   T / L^4
///   9: y^2 x^4   T / L^(6 - 4/3)
/// where L = log T. Only k = 0, sigma = 1/2, cosine part and T <= 5000 are
/// supported; anything else throws std::invalid_argument.
std::vector<StepReport> proof_step_integrals(const PolynomialSpec& spec, unsigned threads = 0);

struct MeanValueCheck {
  double lhs = 0.0;           ///< integral_0^T |sum a_n n^{it}|^2 dt
  double main = 0.0;          ///< T sum |a_n|^2
  double error_budget = 0.0;  ///< sum n |a_n|^2
  double realized_constant = 0.0;  ///< |lhs - main| / error_budget
};

/// Composite Gauss-Legendre with panels of width pi / (4 log N) (N = number of
/// coefficients; a single panel when N = 1). Requires 1 <= N <= 1000, T > 0.
MeanValueCheck l2_mean_value_check(std::span<const std::complex<double>> coefficients, double T,
                                   unsigned threads = 0);

/// a_n = (log n)^k / n for n = 1..N.
std::vector<std::complex<double>> log_power_coefficients(std::size_t N, int k);

/// Grid suprema of the u-sums of the spec's weights (u(s) = sum w_n^2 cos(s log n))
/// at s = 2t, and their ratios to (log T)^{2/3}, (log T)^{4/3}, (log T)^2.
struct SupReport {
  double sup_u = 0.0;
  double sup_u1 = 0.0;
  double sup_u2 = 0.0;
  double ratio_u = 0.0;
  double ratio_u1 = 0.0;
  double ratio_u2 = 0.0;
  /// Triangle-inequality caps sum w_n^2 (log n)^j, j = 0, 1, 2.
  double cap_u = 0.0;
  double cap_u1 = 0.0;
  double cap_u2 = 0.0;
};

/// Requires gridpoints >= 1000. Points are equally spaced and include both ends.
SupReport u_sup_monitor(const PolynomialSpec& spec, const Interval& interval,
                        std::size_t gridpoints, unsigned threads = 0);

}  // namespace dirichlet_roots
