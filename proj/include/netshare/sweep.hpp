#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "netshare/mc.hpp"
#include "netshare/network_value.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Default replicate counts per market size: heavy sampling is cheap for
/// small n, and estimates concentrate as n grows.
std::size_t default_replicates(std::size_t n);

struct SweepConfig {
  std::vector<std::size_t> n_grid;
  ValuationDistribution dist = ValuationDistribution::uniform();
  NetworkValueFn fn = NetworkValueFn::metcalfe();
  double cost = 0.0;
  std::size_t replicates = 0;  // 0: use default_replicates(n) per grid point
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

struct SweepRow {
  std::size_t n = 0;
  std::string model_params;
  double ratio_u_over_d = 0.0;  // uniform / differentiated profit
  double ratio_se = 0.0;
  double poi = 0.0;
  double poi_se = 0.0;
  double uniform_profit = 0.0;
  EstimateWithCI diff_profit;
  EstimateWithCI complete_profit;
};

/// One row per n: the uniform/differentiated profit ratio and the PoI, with
/// delta-method standard errors. The complete-information and virtual-
/// surplus estimators share each replicate's sampled profile (common random
/// numbers), and replicate substreams are keyed by replicate index alone so
/// rows at different n reuse the same underlying draws.
std::vector<SweepRow> run_ratio_sweep(const SweepConfig& config);

}  // namespace netshare
