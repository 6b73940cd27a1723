#include "netshare/uniform_pricing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netshare/golden.hpp"

namespace netshare {

double uniform_objective(double theta_bar, const ValuationDistribution& dist,
                         const NetworkValueFn& fn, double cost, std::size_t n) {
  if (!(theta_bar >= 0.0 && theta_bar <= 1.0)) {
    throw std::invalid_argument("uniform_objective: theta_bar outside [0,1]");
  }
  const double mass = static_cast<double>(n) * (1.0 - dist.cdf(theta_bar));
  return mass * (theta_bar * fn.fluid(mass) - cost);
}

UniformSolution solve_uniform(const ValuationDistribution& dist, const NetworkValueFn& fn,
                              double cost, std::size_t n, const UniformSearchOptions& options) {
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("solve_uniform: cost must be >= 0");
  }
  if (n < 1) {
    throw std::invalid_argument("solve_uniform: n must be >= 1");
  }
  const std::size_t grid = std::max<std::size_t>(options.grid_points, 3);
  const auto objective = [&](double theta) { return uniform_objective(theta, dist, fn, cost, n); };

  std::size_t best_idx = 0;
  double best_value = objective(0.0);
  for (std::size_t k = 1; k < grid; ++k) {
    const double theta = static_cast<double>(k) / static_cast<double>(grid - 1);
    const double value = objective(theta);
    if (value > best_value) {
      best_value = value;
      best_idx = k;
    }
  }

  const auto grid_point = [grid](std::size_t k) {
    return static_cast<double>(k) / static_cast<double>(grid - 1);
  };
  const double lo = best_idx == 0 ? 0.0 : grid_point(best_idx - 1);
  const double hi = best_idx + 1 >= grid ? 1.0 : grid_point(best_idx + 1);
  const double refined = golden_section_maximize(objective, lo, hi, options.golden_tol);

  // Prefer exact boundary points on ties so degenerate markets report a
  // clean shutdown (theta_bar = 1, zero participants). Interior candidates
  // must clear the boundary by more than floating-point resolution.
  double theta_star = 1.0;
  double value_star = objective(1.0);
  for (double candidate : {0.0, grid_point(best_idx), refined}) {
    const double value = objective(candidate);
    if (value > value_star + 1e-12 * std::max(1.0, std::abs(value_star))) {
      value_star = value;
      theta_star = candidate;
    }
  }

  UniformSolution out;
  out.theta_bar = theta_star;
  out.expected_participants = static_cast<double>(n) * (1.0 - dist.cdf(theta_star));
  out.price = theta_star * fn.fluid(out.expected_participants);
  out.expected_profit = value_star;
  return out;
}

AsymptoticOracle asymptotic_oracle(NetworkValueFn::Kind kind, double cost, std::size_t n) {
  AsymptoticOracle oracle;
  oracle.model = kind;
  const double nd = static_cast<double>(n);
  switch (kind) {
    case NetworkValueFn::Kind::Bounded:
      oracle.price_limit = (1.0 + cost) / 2.0;
      oracle.theta_limit = (1.0 + cost) / 2.0;
      oracle.profit = ((1.0 - cost) / 2.0) * ((1.0 - cost) / 2.0) * nd;
      return oracle;
    case NetworkValueFn::Kind::Zipf:
      oracle.price_limit = 0.5 * std::log(nd / 2.0);
      oracle.theta_limit = 0.5;
      oracle.profit = (nd / 4.0) * std::log(nd / 2.0);
      return oracle;
    case NetworkValueFn::Kind::Metcalfe:
      oracle.price_limit = (2.0 / 9.0) * nd;
      oracle.theta_limit = 1.0 / 3.0;
      oracle.profit = (4.0 / 27.0) * nd * nd;
      return oracle;
    case NetworkValueFn::Kind::GeneralConcave:
      break;
  }
  throw std::invalid_argument("asymptotic_oracle: no closed form for the general concave kind");
}

}  // namespace netshare
