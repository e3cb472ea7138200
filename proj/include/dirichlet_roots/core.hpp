#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dirichlet_roots {

/// Which trigonometric function the evaluated sum carries.
///
/// The k-th derivative of Re sum X_n n^{-sigma-it} is, up to an overall sign,
/// sum X_n (log n)^k n^{-sigma} cos(t log n) for even k and the same with sin
/// for odd k. The sign never changes the zero set, so a spec stores the
/// function actually summed; derivative_part() maps (base part, k) to it.
enum class Part { cosine, sine };

std::string_view to_string(Part part) noexcept;
Part parse_part(std::string_view name);

/// Trigonometric part of the k-th derivative of the real (cosine) or
/// imaginary (sine) part of the random Dirichlet polynomial.
Part derivative_part(Part base, int k) noexcept;

/// Validated family parameters (T, k, sigma, part). Construct with make_spec.
class PolynomialSpec {
 public:
  [[nodiscard]] double cutoff() const noexcept { return cutoff_; }
  [[nodiscard]] int derivative_order() const noexcept { return k_; }
  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  [[nodiscard]] Part part() const noexcept { return part_; }

  /// Number of terms, floor(T).
  [[nodiscard]] std::size_t terms() const noexcept { return terms_; }

  /// True when every term vanishes identically: floor(T) = 1 and either the
  /// sine part (sin(t log 1) = 0) or k >= 1 ((log 1)^k = 0).
  [[nodiscard]] bool degenerate() const noexcept { return degenerate_; }

  friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;

 private:
  friend PolynomialSpec make_spec(double T, int k, double sigma, Part part);
  PolynomialSpec() = default;

  double cutoff_ = 0.0;
  int k_ = 0;
  double sigma_ = 0.0;
  Part part_ = Part::cosine;
  std::size_t terms_ = 0;
  bool degenerate_ = false;
};

/// Throws std::invalid_argument for T <= 1, k < 0, sigma < 0 or non-finite input.
PolynomialSpec make_spec(double T, int k, double sigma, Part part = Part::cosine);

/// Closed interval [lo, hi] with lo < hi.
class Interval {
 public:
  Interval(double lo, double hi);

  /// The dyadic window [T, 2T].
  static Interval dyadic(const PolynomialSpec& spec);

  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] double length() const noexcept { return hi_ - lo_; }
  [[nodiscard]] bool contains(double t) const noexcept { return t >= lo_ && t <= hi_; }

 private:
  double lo_;
  double hi_;
};

/// Counter-based stream derivation. The stream seed is
///   splitmix64(master_seed ^ splitmix64(index + 0x9E3779B97F4A7C15))
/// where splitmix64 is the SplitMix64 output finalizer. A trial's stream
/// depends only on (master_seed, index), never on execution order.
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Standard normal variates: std::mt19937_64 seeded with mix_seed, 53-bit
/// uniforms, Box-Muller transform producing pairs (cos branch first).
void fill_standard_normal(std::uint64_t stream_seed, std::span<double> out);

/// Uniform [0, 1) variate number `index` of the stream for `seed`.
double uniform_at(std::uint64_t seed, std::uint64_t index) noexcept;

/// One realization X_1..X_floor(T) of i.i.d. N(0, 1) coefficients.
struct CoefficientSample {
  PolynomialSpec spec;
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
  std::vector<double> values;
};

CoefficientSample sample_coefficients(const PolynomialSpec& spec, std::uint64_t master_seed,
                                      std::uint64_t trial_index);

/// Fixed coefficients, for closed-form checks. values.size() must equal spec.terms().
CoefficientSample fixed_coefficients(const PolynomialSpec& spec, std::vector<double> values);

}  // namespace dirichlet_roots
