#pragma once

#include <cstddef>
#include <vector>

#include "netshare/network_value.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Optimal admission and per-user extraction prices under complete
/// information. Admitted users are the m_star largest valuations; each pays
/// its full utility theta_i * v(m_star); profit is
/// v(m_star) * sum(top m_star theta) - m_star * cost by construction.
struct CompleteInfoSolution {
  std::size_t m_star = 0;
  double profit = 0.0;
  std::vector<double> prices;  // length m_star
};

/// O(n) scan of m in {0,...,n} on prefix sums of the sorted profile.
/// Ties in the argmax break toward smaller m; m = 0 means shut down with
/// profit exactly 0.
CompleteInfoSolution solve_complete(const ValuationProfile& profile, const NetworkValueFn& fn,
                                    double cost);

/// Exhaustive oracle over all 2^n admission subsets (n <= 20), same
/// tie-break (fewest participants). Subset sums accumulate in descending
/// valuation order so a top-prefix optimum reproduces solve_complete's
/// floating-point profit bit for bit.
struct BruteForceSolution {
  std::size_t m_star = 0;
  double profit = 0.0;
  std::vector<double> prices;
  std::vector<std::size_t> members;  // ascending indices into the profile

  bool is_top_prefix() const;
};

BruteForceSolution brute_force_complete(const ValuationProfile& profile, const NetworkValueFn& fn,
                                        double cost);

}  // namespace netshare
