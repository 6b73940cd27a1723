#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace netshare {

/// A valuation distribution on [0,1] given by its cdf F and pdf f.
///
/// Construction validates F(0)=0, F(1)=1, monotone F, nonnegative f, and —
/// the regularity requirement every incomplete-information solver relies
/// on — that the virtual valuation g(theta) = theta - (1-F)/f is
/// non-decreasing on a 10^4-point grid (tolerance -1e-9). Irregular
/// distributions are rejected at construction.
class ValuationDistribution {
public:
  using RealFn = std::function<double(double)>;

  ValuationDistribution(std::string name, RealFn cdf, RealFn pdf, RealFn quantile = nullptr);

  /// Uniform[0,1]: F(x)=x, f(x)=1, g(x)=2x-1.
  static ValuationDistribution uniform();

  double cdf(double theta) const { return cdf_(theta); }
  double pdf(double theta) const { return pdf_(theta); }

  /// Inverse cdf. Uses the supplied closed form when available, otherwise
  /// bisection on [0,1] (F is monotone by construction).
  double quantile(double u) const;

  /// Virtual valuation g(theta) = theta - (1-F(theta))/f(theta).
  /// When F(theta) == 1 the hazard term vanishes and g(theta) = theta.
  /// Throws std::domain_error naming theta if f(theta) = 0 elsewhere.
  double virtual_valuation(double theta) const;

  const std::string& name() const { return name_; }

private:
  std::string name_;
  RealFn cdf_;
  RealFn pdf_;
  RealFn quantile_;
};

/// Free-function form of the virtual valuation.
double virtual_valuation(const ValuationDistribution& dist, double theta);

/// A realization of n private valuations, sorted descending.
struct ValuationProfile {
  std::vector<double> values;  // theta_(1) >= ... >= theta_(n), all in [0,1]
  std::uint64_t seed_id = 0;

  /// Validates range and length, sorts descending.
  static ValuationProfile from_values(std::vector<double> values, std::uint64_t seed_id = 0);

  std::size_t size() const { return values.size(); }
};

/// n i.i.d. draws by inverse-cdf sampling, sorted descending. Bitwise
/// deterministic in (dist, n, seed) regardless of execution context.
ValuationProfile sample_profile(const ValuationDistribution& dist, std::size_t n,
                                std::uint64_t seed);

/// Exact order-statistic moments for Uniform[0,1] samples of size n,
/// descending convention (i = 1 is the maximum):
///   E[theta_(i)]   = 1 - i/(n+1)
///   var[theta_(i)] = i(n+1-i) / ((n+1)^2 (n+2))
///   cov[theta_(i), theta_(j)] = i(n+1-j) / ((n+1)^2 (n+2)),  i < j
struct OrderStatMoments {
  double mean = 0.0;
  double variance = 0.0;
  double covariance = 0.0;  // equals variance when no j was requested
};

OrderStatMoments order_stat_moments(std::size_t n, std::size_t i,
                                    std::optional<std::size_t> j = std::nullopt);

}  // namespace netshare
