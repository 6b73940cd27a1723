#include "netshare/complete_info.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace netshare {

CompleteInfoSolution solve_complete(const ValuationProfile& profile, const NetworkValueFn& fn,
                                    double cost) {
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("solve_complete: cost must be >= 0");
  }
  const std::size_t n = profile.size();
  std::size_t best_m = 0;
  double best_profit = 0.0;
  double best_value = 0.0;  // v(best_m)
  double prefix = 0.0;
  for (std::size_t m = 1; m <= n; ++m) {
    prefix += profile.values[m - 1];
    const double value = fn.evaluate(m);
    const double profit = value * prefix - static_cast<double>(m) * cost;
    if (profit > best_profit) {
      best_profit = profit;
      best_m = m;
      best_value = value;
    }
  }
  CompleteInfoSolution out;
  out.m_star = best_m;
  out.profit = best_profit;
  out.prices.reserve(best_m);
  for (std::size_t i = 0; i < best_m; ++i) {
    out.prices.push_back(profile.values[i] * best_value);
  }
  return out;
}

bool BruteForceSolution::is_top_prefix() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] != i) return false;
  }
  return true;
}

BruteForceSolution brute_force_complete(const ValuationProfile& profile, const NetworkValueFn& fn,
                                        double cost) {
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("brute_force_complete: cost must be >= 0");
  }
  const std::size_t n = profile.size();
  if (n > 20) {
    throw std::invalid_argument("brute_force_complete: refusing n > 20 (2^n subsets)");
  }
  // v(k) depends only on the subset size; evaluate once per size.
  std::vector<double> value_of_size(n + 1);
  for (std::size_t k = 0; k <= n; ++k) value_of_size[k] = fn.evaluate(k);

  std::uint32_t best_mask = 0;
  double best_profit = 0.0;
  std::size_t best_size = 0;
  const std::uint32_t mask_end = static_cast<std::uint32_t>(1u) << n;
  for (std::uint32_t mask = 1; mask < mask_end; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    double sum = 0.0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      sum += profile.values[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    const double profit = value_of_size[size] * sum - static_cast<double>(size) * cost;
    if (profit > best_profit || (profit == best_profit && size < best_size)) {
      best_profit = profit;
      best_mask = mask;
      best_size = size;
    }
  }

  BruteForceSolution out;
  out.m_star = best_size;
  out.profit = best_profit;
  for (std::uint32_t bits = best_mask; bits != 0; bits &= bits - 1) {
    const auto idx = static_cast<std::size_t>(std::countr_zero(bits));
    out.members.push_back(idx);
    out.prices.push_back(profile.values[idx] * value_of_size[best_size]);
  }
  return out;
}

}  // namespace netshare
