#include "netshare/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "netshare/complete_info.hpp"
#include "netshare/differentiated.hpp"
#include "netshare/text_io.hpp"
#include "netshare/uniform_pricing.hpp"

namespace netshare {

std::size_t default_replicates(std::size_t n) {
  if (n <= 1000) return 100000;
  if (n <= 100000) return 10000;
  return 1000;
}

std::vector<SweepRow> run_ratio_sweep(const SweepConfig& config) {
  if (config.n_grid.empty()) {
    throw std::invalid_argument("run_ratio_sweep: empty n grid");
  }
  for (std::size_t i = 1; i < config.n_grid.size(); ++i) {
    if (config.n_grid[i] <= config.n_grid[i - 1]) {
      throw std::invalid_argument("run_ratio_sweep: n grid must be strictly increasing");
    }
  }

  std::string params = config.fn.name();
  if (config.fn.kind() == NetworkValueFn::Kind::Bounded) {
    params += " rho=" + format_short(config.fn.rho());
  }
  params += " cost=" + format_short(config.cost);

  std::vector<SweepRow> rows;
  rows.reserve(config.n_grid.size());
  for (std::size_t n : config.n_grid) {
    const std::size_t replicates =
        config.replicates > 0 ? config.replicates : default_replicates(n);
    ReplicatePlan plan(config.seed, replicates);
    const auto [complete, diff] = run_paired_estimator(
        plan,
        [&, n](std::size_t i) {
          const ValuationProfile profile = sample_profile(config.dist, n, plan.substream(i));
          const double complete_profit = solve_complete(profile, config.fn, config.cost).profit;
          const double surplus =
              virtual_surplus_realization(profile, config.dist, config.fn, config.cost)
                  .virtual_surplus;
          return std::make_pair(complete_profit, surplus);
        },
        config.workers);

    SweepRow row;
    row.n = n;
    row.model_params = params;
    row.uniform_profit = solve_uniform(config.dist, config.fn, config.cost, n).expected_profit;
    row.diff_profit = diff;
    row.complete_profit = complete;
    if (diff.mean > 0.0) {
      row.ratio_u_over_d = row.uniform_profit / diff.mean;
      row.ratio_se = row.uniform_profit * diff.std_error / (diff.mean * diff.mean);
    } else {
      row.ratio_u_over_d = row.uniform_profit == 0.0
                               ? std::numeric_limits<double>::quiet_NaN()
                               : std::numeric_limits<double>::infinity();
      row.ratio_se = 0.0;
    }
    if (row.uniform_profit > 0.0) {
      row.poi = complete.mean / row.uniform_profit;
      row.poi_se = complete.std_error / row.uniform_profit;
    } else {
      row.poi = std::numeric_limits<double>::quiet_NaN();
      row.poi_se = 0.0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace netshare
