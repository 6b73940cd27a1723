#pragma once

#include <cstddef>

#include "netshare/network_value.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Single-posted-price objective at participation threshold theta_bar:
///   n(1-F(theta_bar)) * (theta_bar * v(n(1-F(theta_bar))) - cost)
/// The participant count is the fluid (real-valued) mass n(1-F(theta_bar)),
/// exactly as the threshold formulation writes it; Zipf contributes zero
/// service value for masses <= 1.
double uniform_objective(double theta_bar, const ValuationDistribution& dist,
                         const NetworkValueFn& fn, double cost, std::size_t n);

struct UniformSolution {
  double theta_bar = 1.0;
  double price = 0.0;                // theta_bar * v(mass)
  double expected_profit = 0.0;      // objective at theta_bar
  double expected_participants = 0;  // n(1-F(theta_bar))
};

struct UniformSearchOptions {
  std::size_t grid_points = 10000;  // dense scan, then golden-section refinement
  double golden_tol = 1e-10;
};

/// Global maximum of the (non-convex) threshold objective on [0,1]:
/// dense grid scan, golden-section refinement on the best bracket, and an
/// exact boundary check so shutdown solves return theta_bar = 1 exactly.
UniformSolution solve_uniform(const ValuationDistribution& dist, const NetworkValueFn& fn,
                              double cost, std::size_t n,
                              const UniformSearchOptions& options = {});

/// Closed-form large-n limits of the optimal uniform price, threshold, and
/// profit for the three named models. The bounded model depends on cost;
/// Zipf and Metcalfe do not (cost grows linearly while value grows faster).
struct AsymptoticOracle {
  NetworkValueFn::Kind model{};
  double price_limit = 0.0;
  double theta_limit = 0.0;
  double profit = 0.0;  // profit scaling evaluated at n
};

AsymptoticOracle asymptotic_oracle(NetworkValueFn::Kind kind, double cost, std::size_t n);

}  // namespace netshare
