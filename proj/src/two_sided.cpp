#include "netshare/two_sided.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "netshare/golden.hpp"
#include "netshare/rng.hpp"

namespace netshare {
namespace {

/// Shared profit expression so the solver, the Monte-Carlo estimator, and
/// any grid oracle agree bit for bit on prefix-pair profits.
double prefix_pair_profit(std::size_t m1, std::size_t m2, const std::vector<double>& prefix1,
                          const std::vector<double>& prefix2, double cost) {
  return static_cast<double>(m1) * (prefix1[m1] + prefix2[m2]) -
         static_cast<double>(m1 + m2) * cost;
}

std::vector<double> prefix_sums(const std::vector<double>& sorted_desc) {
  std::vector<double> prefix(sorted_desc.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
    prefix[i + 1] = prefix[i] + sorted_desc[i];
  }
  return prefix;
}

}  // namespace

TwoSidedInstance::TwoSidedInstance(std::size_t contributors, std::size_t consumers, double c,
                                   ValuationDistribution d)
    : n1(contributors), n2(consumers), cost(c), dist(std::move(d)) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("TwoSidedInstance: both groups need at least one user");
  }
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("TwoSidedInstance: cost must be >= 0");
  }
}

TwoSidedCompleteSolution solve_two_sided_complete(const ValuationProfile& contributors,
                                                  const ValuationProfile& consumers, double cost) {
  if (!(cost >= 0.0)) {
    throw std::invalid_argument("solve_two_sided_complete: cost must be >= 0");
  }
  const std::size_t n1 = contributors.size();
  const std::vector<double> prefix1 = prefix_sums(contributors.values);
  const std::vector<double> prefix2 = prefix_sums(consumers.values);

  std::size_t m2_bar = 0;
  while (m2_bar < consumers.size() &&
         static_cast<double>(n1) * consumers.values[m2_bar] >= cost) {
    ++m2_bar;
  }

  const double profit = prefix_pair_profit(n1, m2_bar, prefix1, prefix2, cost);
  TwoSidedCompleteSolution out;
  if (profit > 0.0) {
    out.m1 = n1;
    out.m2 = m2_bar;
    out.profit = profit;
  }
  return out;
}

double two_sided_uniform_objective(double theta1_bar, double theta2_bar,
                                   const TwoSidedInstance& inst) {
  if (!(theta1_bar >= 0.0 && theta1_bar <= 1.0 && theta2_bar >= 0.0 && theta2_bar <= 1.0)) {
    throw std::invalid_argument("two_sided_uniform_objective: thresholds outside [0,1]");
  }
  const double n1 = static_cast<double>(inst.n1);
  const double n2 = static_cast<double>(inst.n2);
  const double p1 = theta1_bar * (1.0 - theta1_bar) * n1;
  const double p2 = theta2_bar * (1.0 - theta1_bar) * n1;
  return n1 * (1.0 - theta1_bar) * (p1 - inst.cost) + n2 * (1.0 - theta2_bar) * (p2 - inst.cost);
}

TwoSidedUniformSolution solve_two_sided_uniform(const TwoSidedInstance& inst) {
  constexpr std::size_t kGrid = 300;
  constexpr std::size_t kSliceGrid = 2000;
  constexpr double kMoveTol = 1e-6;
  constexpr int kMaxPasses = 100;

  const auto objective = [&](double t1, double t2) {
    return two_sided_uniform_objective(t1, t2, inst);
  };

  // Coarse 2-D scan to land near the global optimum.
  double t1 = 0.0, t2 = 0.0;
  double best = objective(0.0, 0.0);
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double x = static_cast<double>(i) / (kGrid - 1);
    for (std::size_t j = 0; j < kGrid; ++j) {
      const double y = static_cast<double>(j) / (kGrid - 1);
      const double value = objective(x, y);
      if (value > best) {
        best = value;
        t1 = x;
        t2 = y;
      }
    }
  }

  // Alternating 1-D passes. Each pass re-scans the full slice (the slices
  // are cubics and can be bimodal) and refines the winning bracket.
  const auto refine_coordinate = [&](const std::function<double(double)>& slice, double current) {
    std::size_t best_idx = 0;
    double best_value = slice(0.0);
    for (std::size_t k = 1; k < kSliceGrid; ++k) {
      const double x = static_cast<double>(k) / (kSliceGrid - 1);
      const double value = slice(x);
      if (value > best_value) {
        best_value = value;
        best_idx = k;
      }
    }
    const double lo = best_idx == 0 ? 0.0 : static_cast<double>(best_idx - 1) / (kSliceGrid - 1);
    const double hi = best_idx + 1 >= kSliceGrid
                          ? 1.0
                          : static_cast<double>(best_idx + 1) / (kSliceGrid - 1);
    const double refined = golden_section_maximize(slice, lo, hi, 1e-12);
    // Boundary snap: corners are exact optima in the low-k regime. Later
    // candidates must beat the incumbent by more than the floating-point
    // resolution of the objective, so a corner never loses to round-off.
    double out = 0.0;
    double out_value = slice(0.0);
    for (double candidate : {1.0, current, static_cast<double>(best_idx) / (kSliceGrid - 1),
                             refined}) {
      const double value = slice(candidate);
      if (value > out_value + 1e-12 * std::max(1.0, std::abs(out_value))) {
        out_value = value;
        out = candidate;
      }
    }
    return out;
  };

  for (int pass = 0; pass < kMaxPasses; ++pass) {
    const double next_t1 = refine_coordinate([&](double x) { return objective(x, t2); }, t1);
    const double next_t2 = refine_coordinate([&](double y) { return objective(next_t1, y); }, t2);
    const double movement = std::abs(next_t1 - t1) + std::abs(next_t2 - t2);
    t1 = next_t1;
    t2 = next_t2;
    if (movement < kMoveTol) break;
  }

  TwoSidedUniformSolution out;
  out.theta1_bar = t1;
  out.theta2_bar = t2;
  out.p1 = t1 * (1.0 - t1) * static_cast<double>(inst.n1);
  out.p2 = t2 * (1.0 - t1) * static_cast<double>(inst.n1);
  out.expected_profit = objective(t1, t2);
  return out;
}

TwoSidedClosedForm two_sided_closed_form(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("two_sided_closed_form: both groups need at least one user");
  }
  const double k = static_cast<double>(n1) / static_cast<double>(n2);
  const double n1d = static_cast<double>(n1);
  const double n2d = static_cast<double>(n2);
  TwoSidedClosedForm out;
  out.theta2_bar = 0.5;
  if (k < 0.25) {
    out.theta1_bar = 0.0;
    out.p1 = 0.0;
    out.p2 = n1d / 2.0;
    out.profit = n1d * n2d / 4.0;
    return out;
  }
  const double s = std::sqrt(k * (4.0 * k + 3.0));
  const double root = std::sqrt(4.0 * n1d * n1d + 3.0 * n1d * n2d);
  out.theta1_bar = std::max(2.0 / 3.0 - s / (6.0 * k), 0.0);
  out.p1 = (4.0 * n1d - 3.0 * n2d + 2.0 * root) / 36.0;
  out.p2 = n1d * n2d / (4.0 * root - 8.0 * n1d);
  out.profit = n2d * n2d * (8.0 * k * k + 9.0 * k + (4.0 * k + 3.0) * s) / 108.0;
  return out;
}

EstimateWithCI two_sided_expected_diff_profit(const TwoSidedInstance& inst,
                                              std::size_t replicates, std::uint64_t seed,
                                              unsigned workers) {
  ReplicatePlan plan(seed, replicates);
  return run_estimator(
      plan,
      [&](std::size_t i) {
        const std::uint64_t sub = plan.substream(i);
        const ValuationProfile prof1 = sample_profile(inst.dist, inst.n1, derive_seed(sub, 0));
        const ValuationProfile prof2 = sample_profile(inst.dist, inst.n2, derive_seed(sub, 1));

        auto g_of = [&](const ValuationProfile& p) {
          std::vector<double> g;
          g.reserve(p.size());
          for (double theta : p.values) g.push_back(inst.dist.virtual_valuation(theta));
          std::sort(g.begin(), g.end(), std::greater<>());
          return g;
        };
        const std::vector<double> g1 = g_of(prof1);
        const std::vector<double> g2 = g_of(prof2);
        const std::vector<double> prefix1 = prefix_sums(g1);
        const std::vector<double> prefix2 = prefix_sums(g2);

        double best = 0.0;  // m1 = 0 shuts down with zero profit
        for (std::size_t m1 = 1; m1 <= inst.n1; ++m1) {
          // For fixed m1 the m2-marginal is m1*g2_(i) - cost, decreasing in
          // i, so the optimal m2 is the count above the cutoff.
          const double cutoff = inst.cost / static_cast<double>(m1);
          const auto m2 = static_cast<std::size_t>(
              std::partition_point(g2.begin(), g2.end(),
                                   [cutoff](double g) { return g >= cutoff; }) -
              g2.begin());
          const double profit = prefix_pair_profit(m1, m2, prefix1, prefix2, inst.cost);
          if (profit > best) best = profit;
        }
        return best;
      },
      workers);
}

double two_sided_poi_closed_form(double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("two_sided_poi_closed_form: k must be positive");
  }
  if (k < 0.25) return 2.0 * (k + 1.0);
  const double s = std::sqrt(k * (4.0 * k + 3.0));
  return 54.0 * k * (k + 1.0) / ((2.0 * k + s) * (3.0 + 2.0 * k + s));
}

double two_sided_poi_alternate(double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("two_sided_poi_alternate: k must be positive");
  }
  if (k >= 0.25) return 2.0 * (k + 1.0);
  const double s = std::sqrt(k * (4.0 * k + 3.0));
  return 54.0 * k * (k + 1.0) / (4.0 * k * k + 7.0 * k + 6.0 + (4.0 * k + 3.0) * s);
}

TwoSidedPoiReport two_sided_poi(const TwoSidedInstance& inst, std::size_t replicates,
                                std::uint64_t seed, unsigned workers) {
  TwoSidedPoiReport report;
  report.poi_closed_form = two_sided_poi_closed_form(inst.k());
  report.poi_alternate = two_sided_poi_alternate(inst.k());
  report.uniform_profit = solve_two_sided_uniform(inst).expected_profit;
  if (!(report.uniform_profit > 0.0)) {
    throw std::runtime_error("two_sided_poi: uniform-pricing profit is not positive; "
                             "PoI is undefined for this configuration");
  }
  ReplicatePlan plan(seed, replicates);
  report.complete_profit = run_estimator(
      plan,
      [&](std::size_t i) {
        const std::uint64_t sub = plan.substream(i);
        const ValuationProfile prof1 = sample_profile(inst.dist, inst.n1, derive_seed(sub, 0));
        const ValuationProfile prof2 = sample_profile(inst.dist, inst.n2, derive_seed(sub, 1));
        return solve_two_sided_complete(prof1, prof2, inst.cost).profit;
      },
      workers);
  report.poi_estimate = report.complete_profit.mean / report.uniform_profit;
  return report;
}

}  // namespace netshare
