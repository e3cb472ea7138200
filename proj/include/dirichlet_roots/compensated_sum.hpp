#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#if defined(__FAST_MATH__)
#error "-ffast-math reassociates floating point and defeats compensated summation"
#endif

namespace dirichlet_roots {

/// Neumaier's variant of Kahan summation. Handles addends larger than the
/// running sum, which plain Kahan does not.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated sum of a range in index order.
inline double compensated_total(std::span<const double> xs) noexcept {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

/// Fixed-shape pairwise reduction. The tree depends only on xs.size(), so the
/// result is bit-identical no matter how the addends were produced.
inline double pairwise_total(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> level(xs.begin(), xs.end());
  while (level.size() > 1) {
    const std::size_t half = level.size() / 2;
    for (std::size_t i = 0; i < half; ++i) level[i] = level[2 * i] + level[2 * i + 1];
    if (level.size() % 2 == 1) {
      level[half] = level.back();
      level.resize(half + 1);
    } else {
      level.resize(half);
    }
  }
  return level.front();
}

}  // namespace dirichlet_roots
