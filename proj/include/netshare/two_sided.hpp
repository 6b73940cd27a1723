#pragma once

#include <cstddef>
#include <cstdint>

#include "netshare/mc.hpp"
#include "netshare/valuation.hpp"

namespace netshare {

/// Two-group market under Metcalfe externalities: group 1 (contributors)
/// both creates and consumes network value, group 2 (pure consumers) only
/// consumes. The externality counts group-1 participants only.
struct TwoSidedInstance {
  std::size_t n1;
  std::size_t n2;
  double cost;
  ValuationDistribution dist;

  TwoSidedInstance(std::size_t contributors, std::size_t consumers, double c,
                   ValuationDistribution d = ValuationDistribution::uniform());

  double k() const { return static_cast<double>(n1) / static_cast<double>(n2); }
};

/// Complete-information solution: all-or-nothing in group 1. Let m2_bar be
/// the largest m2 with n1 * theta2_(m2) >= cost; if the full-inclusion
/// profit n1*(sum theta1 + top-m2_bar theta2) - (n1+m2_bar)*cost is
/// positive the platform admits (n1, m2_bar), otherwise it shuts down.
struct TwoSidedCompleteSolution {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  double profit = 0.0;
};

TwoSidedCompleteSolution solve_two_sided_complete(const ValuationProfile& contributors,
                                                  const ValuationProfile& consumers, double cost);

/// Two-price threshold objective (Uniform[0,1] valuations):
///   n1(1-t1)(t1(1-t1)n1 - c) + n2(1-t2)(t2(1-t1)n1 - c)
/// with prices P1 = t1(1-t1)n1 and P2 = t2(1-t1)n1.
double two_sided_uniform_objective(double theta1_bar, double theta2_bar,
                                   const TwoSidedInstance& inst);

struct TwoSidedUniformSolution {
  double theta1_bar = 0.0;
  double theta2_bar = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double expected_profit = 0.0;
};

/// Global maximum over [0,1]^2: 300x300 grid, then alternating per-
/// coordinate golden-section passes until the thresholds move < 1e-6,
/// with exact boundary snapping (a corner optimum reports P1 = 0 exactly).
TwoSidedUniformSolution solve_two_sided_uniform(const TwoSidedInstance& inst);

/// Large-n closed forms at zero cost. Below k = n1/n2 = 1/4 the optimum is
/// the corner t1 = 0 (contributors ride free to maximize externalities);
/// above it the interior stationary point t1 = 2/3 - sqrt(k(4k+3))/(6k).
/// The profit is the objective evaluated at that optimum; the two branches
/// agree at k = 1/4.
struct TwoSidedClosedForm {
  double theta1_bar = 0.0;
  double theta2_bar = 0.5;
  double p1 = 0.0;
  double p2 = 0.0;
  double profit = 0.0;
};

TwoSidedClosedForm two_sided_closed_form(std::size_t n1, std::size_t n2);

/// Monte-Carlo expected differentiated-pricing profit. Per realization the
/// (m1, m2) maximizer of m1*(top-m1 g1 + top-m2 g2) - (m1+m2)c is found by
/// scanning m1 and using the monotone cutoff m1*g2 >= cost for m2, i.e.
/// O(n1 log n2 + n2 log n2) per replicate.
EstimateWithCI two_sided_expected_diff_profit(const TwoSidedInstance& inst,
                                              std::size_t replicates, std::uint64_t seed,
                                              unsigned workers = 0);

/// Closed-form price of information, branches assigned by continuity at
/// k = 1/4: 2(k+1) on the low-k branch and
/// 54k(k+1) / ((2k+s)(3+2k+s)) with s = sqrt(k(4k+3)) on the high-k branch.
/// Both give 2.5 at k = 1/4; the high-k branch tends to 27/8.
double two_sided_poi_closed_form(double k);

/// The swapped branch assignment (low- and high-k formulas exchanged).
/// Discontinuous at k = 1/4; kept only for side-by-side reporting against
/// the continuity-consistent form.
double two_sided_poi_alternate(double k);

struct TwoSidedPoiReport {
  double poi_closed_form = 0.0;
  double poi_alternate = 0.0;
  double poi_estimate = 0.0;  // MC complete-info numerator / uniform profit
  EstimateWithCI complete_profit;
  double uniform_profit = 0.0;
};

TwoSidedPoiReport two_sided_poi(const TwoSidedInstance& inst, std::size_t replicates,
                                std::uint64_t seed, unsigned workers = 0);

}  // namespace netshare
