#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netshare/mc.hpp"
#include "netshare/network_value.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Image of a sorted valuation profile under the virtual valuation g.
/// g is non-decreasing for accepted distributions, so the image is sorted
/// descending as well.
struct VirtualProfile {
  std::vector<double> g_values;
};

VirtualProfile virtual_profile(const ValuationProfile& profile, const ValuationDistribution& dist);

/// One realization of the optimal (differentiated) mechanism's profit:
/// argmax over m of v(m) * (top-m prefix of g) - m*cost, ties toward
/// smaller m. The m = 0 option makes the surplus nonnegative.
struct DiffProfitRealization {
  std::size_t m_star = 0;
  double virtual_surplus = 0.0;
};

DiffProfitRealization virtual_surplus_realization(const ValuationProfile& profile,
                                                  const ValuationDistribution& dist,
                                                  const NetworkValueFn& fn, double cost);

/// Monte-Carlo estimate of the expected differentiated-pricing profit
/// (the virtual-surplus form, which is unbiased and much lower variance
/// than integrating payments).
EstimateWithCI expected_diff_profit(const ValuationDistribution& dist, const NetworkValueFn& fn,
                                    double cost, std::size_t n, std::size_t replicates,
                                    std::uint64_t seed, unsigned workers = 0);

/// Estimated allocation-value function V_i and payment schedule P_i on a
/// theta grid.
///
/// V_hat(theta) is the Monte-Carlo mean over theta_{-i} ~ F^{n-1} of
/// 1{i admitted} * v(m*), where the allocation rule is the virtual-surplus
/// maximizer applied to the joint profile. The same theta_{-i} pool is
/// reused at every grid point (common random numbers), which keeps the
/// monotonicity of V_hat sharp. P_hat comes from
/// P(theta) = theta V(theta) - integral_0^theta V, with the integral done
/// by trapezoid on the grid; P_hat(0) = 0 exactly.
struct PaymentSchedule {
  std::vector<double> grid;
  std::vector<double> v_hat;
  std::vector<double> v_se;   // per-point standard errors of v_hat
  std::vector<double> p_hat;
  std::size_t samples_per_point = 0;
};

PaymentSchedule estimate_payment_schedule(const ValuationDistribution& dist,
                                          const NetworkValueFn& fn, double cost, std::size_t n,
                                          std::size_t grid_size, std::size_t samples_per_point,
                                          std::uint64_t seed);

/// Incentive-compatibility audit of a schedule: for every ordered grid pair
/// (theta, theta'), truthful payoff theta*V(theta) - P(theta) must beat the
/// misreport payoff theta*V(theta') - P(theta') up to a slack of 3 pooled
/// standard errors. Violations are reported, never thrown.
struct IcReport {
  double worst_violation = 0.0;  // largest misreport-minus-truthful payoff gap
  double worst_excess = 0.0;     // largest gap beyond the slack (<= 0 means IC holds)
  std::size_t flagged_pairs = 0;
  std::size_t worst_truth_index = 0;
  std::size_t worst_misreport_index = 0;
};

IcReport check_incentive_compatibility(const PaymentSchedule& schedule);

}  // namespace netshare
