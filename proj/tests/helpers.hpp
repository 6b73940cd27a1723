#pragma once

// Shared test utilities: deterministic instance generation and the small
// exhaustive oracles the property tests compare against.

#include <bit>
#include <cstdint>
#include <vector>

#include "netshare/rng.hpp"
#include "netshare/valuation.hpp"

namespace testutil {

inline const netshare::ValuationDistribution& uniform_dist() {
  static const netshare::ValuationDistribution dist = netshare::ValuationDistribution::uniform();
  return dist;
}

inline netshare::ValuationProfile random_profile(std::size_t n, std::uint64_t seed) {
  return netshare::sample_profile(uniform_dist(), n, seed);
}

/// Sequential prefix sums, index 0 empty. Accumulation order matches the
/// library's scans so prefix-subset profits agree bit for bit.
inline std::vector<double> prefix_sums(const std::vector<double>& sorted_desc) {
  std::vector<double> prefix(sorted_desc.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
    prefix[i + 1] = prefix[i] + sorted_desc[i];
  }
  return prefix;
}

/// Two-sided prefix-pair profit, written with the exact expression the
/// library uses.
inline double pair_profit(std::size_t m1, std::size_t m2, const std::vector<double>& prefix1,
                          const std::vector<double>& prefix2, double cost) {
  return static_cast<double>(m1) * (prefix1[m1] + prefix2[m2]) -
         static_cast<double>(m1 + m2) * cost;
}

struct GridBruteResult {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  double profit = 0.0;
};

/// Exhaustive scan of every (m1, m2) prefix pair; ties toward fewer total
/// participants, then smaller m1.
inline GridBruteResult two_sided_grid_brute(const std::vector<double>& group1_desc,
                                            const std::vector<double>& group2_desc, double cost) {
  const auto prefix1 = prefix_sums(group1_desc);
  const auto prefix2 = prefix_sums(group2_desc);
  GridBruteResult best;
  for (std::size_t m1 = 0; m1 <= group1_desc.size(); ++m1) {
    for (std::size_t m2 = 0; m2 <= group2_desc.size(); ++m2) {
      const double profit = pair_profit(m1, m2, prefix1, prefix2, cost);
      const bool better =
          profit > best.profit ||
          (profit == best.profit && m1 + m2 < best.m1 + best.m2);
      if (better) {
        best = {m1, m2, profit};
      }
    }
  }
  return best;
}

struct SubsetBruteResult {
  std::uint32_t mask1 = 0;
  std::uint32_t mask2 = 0;
  double profit = 0.0;
};

/// Full 2^(n1+n2) subset enumeration of the two-sided complete-information
/// problem: profit = |S1| * (sum theta over S1 + sum theta over S2)
/// - (|S1|+|S2|) * cost. Group sums accumulate in ascending index order.
inline SubsetBruteResult two_sided_subset_brute(const std::vector<double>& group1_desc,
                                                const std::vector<double>& group2_desc,
                                                double cost) {
  const std::size_t n1 = group1_desc.size();
  const std::size_t n2 = group2_desc.size();
  SubsetBruteResult best;
  for (std::uint32_t mask1 = 0; mask1 < (1u << n1); ++mask1) {
    double sum1 = 0.0;
    std::size_t m1 = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      if (mask1 & (1u << i)) {
        sum1 += group1_desc[i];
        ++m1;
      }
    }
    for (std::uint32_t mask2 = 0; mask2 < (1u << n2); ++mask2) {
      double sum2 = 0.0;
      std::size_t m2 = 0;
      for (std::size_t i = 0; i < n2; ++i) {
        if (mask2 & (1u << i)) {
          sum2 += group2_desc[i];
          ++m2;
        }
      }
      const double profit =
          static_cast<double>(m1) * (sum1 + sum2) - static_cast<double>(m1 + m2) * cost;
      const bool better = profit > best.profit ||
                          (profit == best.profit &&
                           m1 + m2 < static_cast<std::size_t>(std::popcount(best.mask1)) +
                                         static_cast<std::size_t>(std::popcount(best.mask2)));
      if (better) {
        best = {mask1, mask2, profit};
      }
    }
  }
  return best;
}

inline bool is_prefix_mask(std::uint32_t mask) { return (mask & (mask + 1)) == 0; }

}  // namespace testutil
