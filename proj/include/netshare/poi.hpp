#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netshare/mc.hpp"
#include "netshare/network_value.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Price of information at finite n: Monte-Carlo expected complete-
/// information profit over the deterministic uniform-pricing profit.
/// Closed-form limits (2 for bounded and Zipf, 27/8 for Metcalfe) are
/// attached when the model has one.
struct PoIReport {
  double poi_estimate = 0.0;
  EstimateWithCI complete_profit;
  double uniform_profit = 0.0;
  std::optional<double> closed_form;
  NetworkValueFn::Kind model{};
  std::size_t n = 0;
};

PoIReport estimate_poi(const ValuationDistribution& dist, const NetworkValueFn& fn, double cost,
                       std::size_t n, std::size_t replicates, std::uint64_t seed,
                       unsigned workers = 0);

/// Universal PoI bracket for unbounded concave value functions, plus the
/// finite-n estimates along a sweep of n (cost 0: the limits are cost-
/// free). Only the general-concave kind is accepted here; the named models
/// have exact constants via estimate_poi.
struct PoiBounds {
  double lower = 2.0;
  double upper = 27.0 / 8.0;
  std::vector<PoIReport> estimates;
};

PoiBounds poi_bounds_general(const NetworkValueFn& fn, const std::vector<std::size_t>& n_sequence,
                             std::size_t replicates, std::uint64_t seed, unsigned workers = 0);

}  // namespace netshare
