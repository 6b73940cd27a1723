#include "netshare/poi.hpp"

#include <stdexcept>

#include "netshare/complete_info.hpp"
#include "netshare/uniform_pricing.hpp"

namespace netshare {
namespace {

std::optional<double> poi_limit(NetworkValueFn::Kind kind) {
  switch (kind) {
    case NetworkValueFn::Kind::Bounded:
    case NetworkValueFn::Kind::Zipf:
      return 2.0;
    case NetworkValueFn::Kind::Metcalfe:
      return 27.0 / 8.0;
    case NetworkValueFn::Kind::GeneralConcave:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

PoIReport estimate_poi(const ValuationDistribution& dist, const NetworkValueFn& fn, double cost,
                       std::size_t n, std::size_t replicates, std::uint64_t seed,
                       unsigned workers) {
  PoIReport report;
  report.model = fn.kind();
  report.n = n;
  report.closed_form = poi_limit(fn.kind());
  report.uniform_profit = solve_uniform(dist, fn, cost, n).expected_profit;
  if (!(report.uniform_profit > 0.0)) {
    throw std::runtime_error("estimate_poi: uniform-pricing profit is not positive; "
                             "PoI is undefined for this configuration");
  }
  ReplicatePlan plan(seed, replicates);
  report.complete_profit = run_estimator(
      plan,
      [&](std::size_t i) {
        const ValuationProfile profile = sample_profile(dist, n, plan.substream(i));
        return solve_complete(profile, fn, cost).profit;
      },
      workers);
  report.poi_estimate = report.complete_profit.mean / report.uniform_profit;
  return report;
}

PoiBounds poi_bounds_general(const NetworkValueFn& fn, const std::vector<std::size_t>& n_sequence,
                             std::size_t replicates, std::uint64_t seed, unsigned workers) {
  if (fn.kind() != NetworkValueFn::Kind::GeneralConcave) {
    throw std::invalid_argument(
        "poi_bounds_general: expects a general concave value function "
        "(named models have exact constants)");
  }
  PoiBounds bounds;
  const ValuationDistribution uniform = ValuationDistribution::uniform();
  bounds.estimates.reserve(n_sequence.size());
  for (std::size_t n : n_sequence) {
    bounds.estimates.push_back(estimate_poi(uniform, fn, 0.0, n, replicates, seed, workers));
  }
  return bounds;
}

}  // namespace netshare
