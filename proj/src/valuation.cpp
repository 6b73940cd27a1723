#include "netshare/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "netshare/rng.hpp"

namespace netshare {
namespace {

constexpr int kRegularityGridPoints = 10000;
constexpr double kRegularityTolerance = -1e-9;
constexpr double kEndpointTolerance = 1e-9;

std::string format_theta(double theta) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", theta);
  return buffer;
}

double virtual_valuation_impl(const std::function<double(double)>& cdf,
                              const std::function<double(double)>& pdf, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("virtual_valuation: theta=" + format_theta(theta) +
                                " outside [0,1]");
  }
  const double tail = 1.0 - cdf(theta);
  if (tail == 0.0) return theta;  // hazard term vanishes at the top of the support
  const double density = pdf(theta);
  if (!(density > 0.0)) {
    throw std::domain_error("virtual_valuation: pdf vanishes at theta=" + format_theta(theta));
  }
  return theta - tail / density;
}

}  // namespace

ValuationDistribution::ValuationDistribution(std::string name, RealFn cdf, RealFn pdf,
                                             RealFn quantile)
    : name_(std::move(name)), cdf_(std::move(cdf)), pdf_(std::move(pdf)),
      quantile_(std::move(quantile)) {
  if (!cdf_ || !pdf_) {
    throw std::invalid_argument("ValuationDistribution: cdf and pdf are required");
  }
  if (std::abs(cdf_(0.0)) > kEndpointTolerance || std::abs(cdf_(1.0) - 1.0) > kEndpointTolerance) {
    throw std::invalid_argument("ValuationDistribution '" + name_ +
                                "': cdf must satisfy F(0)=0 and F(1)=1");
  }
  double prev_cdf = cdf_(0.0);
  double prev_g = 0.0;
  for (int k = 0; k < kRegularityGridPoints; ++k) {
    const double theta = static_cast<double>(k) / (kRegularityGridPoints - 1);
    const double F = cdf_(theta);
    if (F < prev_cdf - kEndpointTolerance) {
      throw std::invalid_argument("ValuationDistribution '" + name_ + "': cdf decreases at theta=" +
                                  std::to_string(theta));
    }
    prev_cdf = F;
    if (pdf_(theta) < 0.0) {
      throw std::invalid_argument("ValuationDistribution '" + name_ + "': pdf negative at theta=" +
                                  std::to_string(theta));
    }
    double g;
    try {
      g = virtual_valuation_impl(cdf_, pdf_, theta);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("ValuationDistribution '" + name_ +
                                  "': pdf vanishes inside the support at theta=" +
                                  std::to_string(theta));
    }
    if (k > 0 && g - prev_g < kRegularityTolerance) {
      throw std::invalid_argument("ValuationDistribution '" + name_ +
                                  "': virtual valuation not non-decreasing (irregular) at theta=" +
                                  std::to_string(theta));
    }
    prev_g = g;
  }
}

ValuationDistribution ValuationDistribution::uniform() {
  return ValuationDistribution(
      "uniform",
      [](double x) { return std::clamp(x, 0.0, 1.0); },
      [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; },
      [](double u) { return u; });
}

double ValuationDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("quantile: u outside [0,1]");
  }
  if (quantile_) return quantile_(u);
  // Bisection; F is monotone so this converges to ~1e-18 interval width.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf_(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ValuationDistribution::virtual_valuation(double theta) const {
  return virtual_valuation_impl(cdf_, pdf_, theta);
}

double virtual_valuation(const ValuationDistribution& dist, double theta) {
  return dist.virtual_valuation(theta);
}

ValuationProfile ValuationProfile::from_values(std::vector<double> values, std::uint64_t seed_id) {
  if (values.empty()) {
    throw std::invalid_argument("ValuationProfile: need at least one valuation");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("ValuationProfile: valuation " + std::to_string(v) +
                                  " outside [0,1]");
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  ValuationProfile profile;
  profile.values = std::move(values);
  profile.seed_id = seed_id;
  return profile;
}

ValuationProfile sample_profile(const ValuationDistribution& dist, std::size_t n,
                                std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("sample_profile: n must be >= 1");
  }
  Xoshiro256 rng(seed);
  std::vector<double> values(n);
  for (auto& v : values) v = dist.quantile(rng.uniform01());
  std::sort(values.begin(), values.end(), std::greater<>());
  ValuationProfile profile;
  profile.values = std::move(values);
  profile.seed_id = seed;
  return profile;
}

OrderStatMoments order_stat_moments(std::size_t n, std::size_t i, std::optional<std::size_t> j) {
  if (n == 0 || i < 1 || i > n) {
    throw std::invalid_argument("order_stat_moments: require 1 <= i <= n");
  }
  if (j && (*j <= i || *j > n)) {
    throw std::invalid_argument("order_stat_moments: require i < j <= n");
  }
  const double np1 = static_cast<double>(n + 1);
  const double denom = np1 * np1 * static_cast<double>(n + 2);
  OrderStatMoments m;
  m.mean = 1.0 - static_cast<double>(i) / np1;
  m.variance = static_cast<double>(i) * static_cast<double>(n + 1 - i) / denom;
  m.covariance = j ? static_cast<double>(i) * static_cast<double>(n + 1 - *j) / denom
                   : m.variance;
  return m;
}

}  // namespace netshare
