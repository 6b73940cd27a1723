#pragma once

#include <cmath>
#include <cstddef>

namespace netshare {

/// Streaming mean/variance accumulator (Welford). Single pass, numerically
/// stable; combination across replicates happens by pushing values in
/// replicate-index order so results never depend on scheduling.
class RunningStats {
public:
  void push(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }

  double variance_sample() const noexcept {
    if (count_ < 2) return 0.0;
    return m2_ / static_cast<double>(count_ - 1);
  }

  double std_dev() const noexcept { return std::sqrt(variance_sample()); }

  /// Standard error of the mean: sample sd / sqrt(count).
  double std_error() const noexcept {
    if (count_ < 2) return 0.0;
    return std_dev() / std::sqrt(static_cast<double>(count_));
  }

private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace netshare
