#include "netshare/differentiated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netshare/rng.hpp"
#include "netshare/stats.hpp"

namespace netshare {
namespace {

/// Argmax over m in {0..n} of v(m) * prefix(m) - m*cost on an already
/// descending vector, ties toward smaller m.
DiffProfitRealization scan_virtual_surplus(const std::vector<double>& g_sorted,
                                           const NetworkValueFn& fn, double cost) {
  DiffProfitRealization out;
  double prefix = 0.0;
  for (std::size_t m = 1; m <= g_sorted.size(); ++m) {
    prefix += g_sorted[m - 1];
    const double surplus = fn.evaluate(m) * prefix - static_cast<double>(m) * cost;
    if (surplus > out.virtual_surplus) {
      out.virtual_surplus = surplus;
      out.m_star = m;
    }
  }
  return out;
}

}  // namespace

VirtualProfile virtual_profile(const ValuationProfile& profile,
                               const ValuationDistribution& dist) {
  VirtualProfile vp;
  vp.g_values.reserve(profile.size());
  for (double theta : profile.values) {
    vp.g_values.push_back(dist.virtual_valuation(theta));
  }
  // g is non-decreasing on the grid check only; guard against sub-tolerance
  // wiggles from user-supplied cdf/pdf pairs.
  std::sort(vp.g_values.begin(), vp.g_values.end(), std::greater<>());
  return vp;
}

DiffProfitRealization virtual_surplus_realization(const ValuationProfile& profile,
                                                  const ValuationDistribution& dist,
                                                  const NetworkValueFn& fn, double cost) {
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("virtual_surplus_realization: cost must be >= 0");
  }
  const VirtualProfile vp = virtual_profile(profile, dist);
  return scan_virtual_surplus(vp.g_values, fn, cost);
}

EstimateWithCI expected_diff_profit(const ValuationDistribution& dist, const NetworkValueFn& fn,
                                    double cost, std::size_t n, std::size_t replicates,
                                    std::uint64_t seed, unsigned workers) {
  ReplicatePlan plan(seed, replicates);
  return run_estimator(
      plan,
      [&, n, cost](std::size_t i) {
        const ValuationProfile profile = sample_profile(dist, n, plan.substream(i));
        return virtual_surplus_realization(profile, dist, fn, cost).virtual_surplus;
      },
      workers);
}

PaymentSchedule estimate_payment_schedule(const ValuationDistribution& dist,
                                          const NetworkValueFn& fn, double cost, std::size_t n,
                                          std::size_t grid_size, std::size_t samples_per_point,
                                          std::uint64_t seed) {
  if (grid_size < 2) {
    throw std::invalid_argument("estimate_payment_schedule: grid_size must be >= 2");
  }
  if (n < 1) {
    throw std::invalid_argument("estimate_payment_schedule: n must be >= 1");
  }
  if (samples_per_point < 2) {
    throw std::invalid_argument("estimate_payment_schedule: samples_per_point must be >= 2");
  }

  PaymentSchedule schedule;
  schedule.samples_per_point = samples_per_point;
  schedule.grid.resize(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    schedule.grid[k] = static_cast<double>(k) / static_cast<double>(grid_size - 1);
  }
  std::vector<double> g_grid(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    g_grid[k] = dist.virtual_valuation(schedule.grid[k]);
  }

  std::vector<RunningStats> acc(grid_size);
  std::vector<double> g_others;       // descending virtual values of theta_{-i}
  std::vector<double> prefix_others;  // prefix_others[m] = sum of top m entries

  Xoshiro256 pool_rng(seed);
  for (std::size_t s = 0; s < samples_per_point; ++s) {
    // One theta_{-i} draw shared by every grid point of this pass.
    g_others.clear();
    for (std::size_t j = 0; j + 1 < n; ++j) {
      g_others.push_back(dist.virtual_valuation(dist.quantile(pool_rng.uniform01())));
    }
    std::sort(g_others.begin(), g_others.end(), std::greater<>());
    prefix_others.assign(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) {
      prefix_others[m] = prefix_others[m - 1] + g_others[m - 1];
    }

    for (std::size_t k = 0; k < grid_size; ++k) {
      const double gi = g_grid[k];
      // Rank of user i in the merged descending order; equal values sort
      // ahead of user i.
      const std::size_t rank = static_cast<std::size_t>(
          std::partition_point(g_others.begin(), g_others.end(),
                               [gi](double g) { return g >= gi; }) -
          g_others.begin());
      // Merged prefix: top-m of (g_others union {gi}).
      std::size_t best_m = 0;
      double best_surplus = 0.0;
      for (std::size_t m = 1; m <= n; ++m) {
        const double prefix =
            m <= rank ? prefix_others[m] : prefix_others[m - 1] + gi;
        const double surplus = fn.evaluate(m) * prefix - static_cast<double>(m) * cost;
        if (surplus > best_surplus) {
          best_surplus = surplus;
          best_m = m;
        }
      }
      const bool admitted = best_m > rank;
      acc[k].push(admitted ? fn.evaluate(best_m) : 0.0);
    }
  }

  schedule.v_hat.resize(grid_size);
  schedule.v_se.resize(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    schedule.v_hat[k] = acc[k].mean();
    schedule.v_se[k] = acc[k].std_error();
  }

  // P(theta) = theta*V(theta) - integral_0^theta V, trapezoid on the grid.
  schedule.p_hat.resize(grid_size);
  double integral = 0.0;
  schedule.p_hat[0] = 0.0;
  for (std::size_t k = 1; k < grid_size; ++k) {
    const double dx = schedule.grid[k] - schedule.grid[k - 1];
    integral += 0.5 * (schedule.v_hat[k] + schedule.v_hat[k - 1]) * dx;
    schedule.p_hat[k] = schedule.grid[k] * schedule.v_hat[k] - integral;
  }
  return schedule;
}

IcReport check_incentive_compatibility(const PaymentSchedule& schedule) {
  const std::size_t g = schedule.grid.size();
  // Standard error of the accumulated integral, propagated linearly
  // (the common-random-number estimates are positively correlated, so the
  // linear accumulation is an upper bound).
  std::vector<double> integral_se(g, 0.0);
  for (std::size_t k = 1; k < g; ++k) {
    const double dx = schedule.grid[k] - schedule.grid[k - 1];
    integral_se[k] = integral_se[k - 1] + 0.5 * (schedule.v_se[k] + schedule.v_se[k - 1]) * dx;
  }

  IcReport report;
  report.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < g; ++t) {
    const double theta = schedule.grid[t];
    const double truthful = theta * schedule.v_hat[t] - schedule.p_hat[t];
    const double truthful_se = integral_se[t];  // truthful payoff reduces to the integral term
    for (std::size_t r = 0; r < g; ++r) {
      const double misreport = theta * schedule.v_hat[r] - schedule.p_hat[r];
      const double violation = misreport - truthful;
      // Payoff at a misreport r is (theta - theta_r) V(r) + integral(r).
      const double misreport_se =
          std::abs(theta - schedule.grid[r]) * schedule.v_se[r] + integral_se[r];
      const double slack = 3.0 * (misreport_se + truthful_se);
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.worst_truth_index = t;
        report.worst_misreport_index = r;
      }
      if (violation - slack > report.worst_excess) {
        report.worst_excess = violation - slack;
      }
      if (violation > slack) ++report.flagged_pairs;
    }
  }
  return report;
}

}  // namespace netshare
