#pragma once

#include <vector>

namespace dirichlet_roots {

/// Two-term prediction for the expected zero count of the k-th derivative on
/// [T, 2T]:
///   main   = (1/pi) sqrt((2k+1)/(2k+3)) T log T
///   second = -(gamma_{2k} / 2pi) sqrt((2k+1)^3/(2k+3)) T / (log T)^{2k}
/// error_scale = T / (log T)^{2k+1} is the order of the neglected remainder.
struct AsymptoticPrediction {
  double main_term = 0.0;
  double second_term = 0.0;
  double total = 0.0;
  double error_scale = 0.0;
  int k = 0;
};

inline constexpr int kMaxStieltjesIndex = 16;

/// gamma_m, the constant term of sum_{n<=X} (log n)^m / n - (log X)^{m+1}/(m+1).
/// gamma_0 is the Euler-Mascheroni constant. Supported for 0 <= m <= 16;
/// throws std::out_of_range otherwise.
double stieltjes_constant(int m);

struct StieltjesTable {
  std::vector<double> values;  ///< gamma_0 .. gamma_max
};
StieltjesTable stieltjes_table(int max_index);

/// Requires T >= 2 and 2k <= 16.
AsymptoticPrediction predict_expected_zeros(double T, int k);

/// Main terms of the zeta zero count, (T/2pi) log(T/2pi) - T/2pi.
/// Returned as-is even where negative (small T).
double zeta_zero_count(double T);

/// ek_value / (N_zeta(2T) - N_zeta(T)). Requires T >= 100.
double model_vs_zeta_ratio(double T, int k, double ek_value);

struct StieltjesResidual {
  double residual = 0.0;  ///< sum_{n<=T} (log n)^m/n - (log T)^{m+1}/(m+1) - gamma_m
  double envelope = 0.0;  ///< (log T)^m / T
  double constant = 0.0;  ///< |residual| / envelope
};

StieltjesResidual stieltjes_sum_check(double T, int m);

}  // namespace dirichlet_roots
