#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "netshare/complete_info.hpp"
#include "netshare/mc.hpp"
#include "netshare/network_value.hpp"
#include "netshare/stats.hpp"

using namespace netshare;

TEST_CASE("two-user bounded example") {
  const auto profile = ValuationProfile::from_values({0.9, 0.5});
  const auto fn = NetworkValueFn::bounded(0.5);
  const auto solution = solve_complete(profile, fn, 0.1);
  CHECK(solution.m_star == 2);
  CHECK(solution.profit == doctest::Approx(0.85).epsilon(1e-12));  // 0.75*1.4 - 0.2
  REQUIRE(solution.prices.size() == 2);
  CHECK(solution.prices[0] == doctest::Approx(0.9 * 0.75).epsilon(1e-15));
  CHECK(solution.prices[1] == doctest::Approx(0.5 * 0.75).epsilon(1e-15));

  const auto brute = brute_force_complete(profile, fn, 0.1);
  CHECK(brute.profit == solution.profit);  // identical expression order
  CHECK(brute.m_star == 2);
  CHECK(brute.is_top_prefix());
}

TEST_CASE("single-user examples") {
  const auto brute =
      brute_force_complete(ValuationProfile::from_values({0.8}), NetworkValueFn::bounded(0.5), 0.1);
  CHECK(brute.m_star == 1);
  CHECK(brute.profit == doctest::Approx(0.3).epsilon(1e-12));

  const auto shut =
      brute_force_complete(ValuationProfile::from_values({0.2}), NetworkValueFn::metcalfe(), 0.5);
  CHECK(shut.m_star == 0);
  CHECK(shut.profit == 0.0);
}

TEST_CASE("cost above every valuation shuts the platform down") {
  const auto profile = testutil::random_profile(8, 31);
  for (const auto& fn : {NetworkValueFn::bounded(0.3), NetworkValueFn::bounded(0.9)}) {
    const auto solution = solve_complete(profile, fn, 1.0);
    CHECK(solution.m_star == 0);
    CHECK(solution.profit == 0.0);
    CHECK(solution.prices.empty());
  }
}

TEST_CASE("zero cost under Metcalfe admits everyone") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto profile = testutil::random_profile(1 + seed % 9, 100 + seed);
    const auto solution = solve_complete(profile, NetworkValueFn::metcalfe(), 0.0);
    CHECK(solution.m_star == profile.size());
    const auto brute = brute_force_complete(profile, NetworkValueFn::metcalfe(), 0.0);
    CHECK(brute.m_star == profile.size());
  }
}

TEST_CASE("brute force guards the exponential blowup") {
  const auto profile = testutil::random_profile(21, 5);
  CHECK_THROWS_AS(brute_force_complete(profile, NetworkValueFn::metcalfe(), 0.1),
                  std::invalid_argument);
}

TEST_CASE("oracle equivalence and the top-prefix property on random instances") {
  const double costs[] = {0.0, 0.1, 0.5, 1.5};
  std::size_t checked = 0;
  for (std::uint64_t r = 0; r < 400; ++r) {
    const std::size_t n = 1 + static_cast<std::size_t>(mix64(r) % 12);
    const auto profile = testutil::random_profile(n, 9000 + r);
    const NetworkValueFn models[] = {NetworkValueFn::bounded(0.3 + 0.6 * ((r % 3) / 2.0)),
                                     NetworkValueFn::zipf(), NetworkValueFn::metcalfe()};
    for (const auto& fn : models) {
      for (double cost : costs) {
        const auto fast = solve_complete(profile, fn, cost);
        const auto brute = brute_force_complete(profile, fn, cost);
        const bool exact = fast.profit == brute.profit;
        const bool close =
            std::abs(fast.profit - brute.profit) <= 1e-12 * std::max(1.0, std::abs(brute.profit));
        REQUIRE((exact || close));
        REQUIRE(fast.m_star == brute.m_star);
        REQUIRE(brute.is_top_prefix());
        ++checked;
      }
    }
  }
  CHECK(checked == 400 * 3 * 4);
}

TEST_CASE("expected complete-information profit approaches (1-c)^2/2 per user") {
  // Bounded model, c = 0.5: the per-user limit is 0.125.
  const auto dist = ValuationDistribution::uniform();
  const auto fn = NetworkValueFn::bounded(0.9);
  const std::size_t n = 100000;
  ReplicatePlan plan(271828, 200);
  RunningStats acc;
  for (std::size_t r = 0; r < plan.replicate_count(); ++r) {
    const auto profile = sample_profile(dist, n, plan.substream(r));
    acc.push(solve_complete(profile, fn, 0.5).profit);
  }
  const double per_user = acc.mean() / static_cast<double>(n);
  CHECK(per_user == doctest::Approx(0.125).epsilon(0.02));
}
