#include "dirichlet_roots/core.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dirichlet_roots {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// 53 random bits mapped onto [0, 1).
double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view to_string(Part part) noexcept {
  return part == Part::cosine ? "cosine" : "sine";
}

Part parse_part(std::string_view name) {
  if (name == "cosine" || name == "cos") return Part::cosine;
  if (name == "sine" || name == "sin") return Part::sine;
  throw std::invalid_argument("unknown part '" + std::string(name) + "' (expected cosine or sine)");
}

Part derivative_part(Part base, int k) noexcept {
  if (k % 2 == 0) return base;
  return base == Part::cosine ? Part::sine : Part::cosine;
}

PolynomialSpec make_spec(double T, int k, double sigma, Part part) {
  if (!std::isfinite(T) || T <= 1.0) throw std::invalid_argument("T must be a finite real > 1");
  if (k < 0) throw std::invalid_argument("derivative order k must be >= 0");
  if (!std::isfinite(sigma) || sigma < 0.0) throw std::invalid_argument("sigma must be finite and >= 0");

  PolynomialSpec spec;
  spec.cutoff_ = T;
  spec.k_ = k;
  spec.sigma_ = sigma;
  spec.part_ = part;
  spec.terms_ = static_cast<std::size_t>(std::floor(T));
  spec.degenerate_ = spec.terms_ == 1 && (part == Part::sine || k >= 1);
  return spec;
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("interval requires finite lo < hi");
  }
}

Interval Interval::dyadic(const PolynomialSpec& spec) {
  return {spec.cutoff(), 2.0 * spec.cutoff()};
}

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return splitmix64(master_seed ^ splitmix64(index + kGolden));
}

void fill_standard_normal(std::uint64_t stream_seed, std::span<double> out) {
  std::mt19937_64 engine(stream_seed);
  std::size_t i = 0;
  while (i < out.size()) {
    // u1 in (0, 1] keeps the logarithm finite.
    const double u1 = 1.0 - unit_interval(engine());
    const double u2 = unit_interval(engine());
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out[i++] = radius * std::cos(angle);
    if (i < out.size()) out[i++] = radius * std::sin(angle);
  }
}

double uniform_at(std::uint64_t seed, std::uint64_t index) noexcept {
  return unit_interval(mix_seed(seed, index));
}

CoefficientSample sample_coefficients(const PolynomialSpec& spec, std::uint64_t master_seed,
                                      std::uint64_t trial_index) {
  CoefficientSample sample{spec, master_seed, trial_index, std::vector<double>(spec.terms())};
  fill_standard_normal(mix_seed(master_seed, trial_index), sample.values);
  return sample;
}

CoefficientSample fixed_coefficients(const PolynomialSpec& spec, std::vector<double> values) {
  if (values.size() != spec.terms()) {
    throw std::invalid_argument("coefficient count must equal floor(T)");
  }
  return CoefficientSample{spec, 0, 0, std::move(values)};
}

}  // namespace dirichlet_roots
