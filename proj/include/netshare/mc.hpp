#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

#include "netshare/rng.hpp"

namespace netshare {

/// Monte-Carlo estimate with its standard error and provenance.
struct EstimateWithCI {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;  // never serialized; outputs stay byte-stable
};

/// Replicate schedule: a master seed plus a counter-based substream
/// derivation. Substreams are pairwise distinct (SplitMix64 is a bijection
/// and the counter offsets are distinct) and independent of scheduling.
class ReplicatePlan {
public:
  ReplicatePlan(std::uint64_t master_seed, std::size_t replicate_count)
      : master_seed_(master_seed), replicate_count_(replicate_count) {}

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::size_t replicate_count() const noexcept { return replicate_count_; }

  std::uint64_t substream(std::size_t replicate) const noexcept {
    return mix64(master_seed_ + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(replicate) + 1));
  }

private:
  std::uint64_t master_seed_;
  std::size_t replicate_count_;
};

/// Evaluates `estimand` for every replicate id in the plan over a worker
/// pool and returns mean and standard error.
///
/// Replicate values are accumulated in index order after the parallel pass,
/// so the result is bitwise identical for any worker count. Requires
/// replicate_count >= 2. A non-finite estimand value aborts with the
/// offending replicate id in the exception message.
EstimateWithCI run_estimator(const ReplicatePlan& plan,
                             const std::function<double(std::size_t)>& estimand,
                             unsigned workers = 0);

/// Same contract as run_estimator for an estimand producing two values per
/// replicate from common random numbers (e.g. complete-information profit
/// and virtual surplus of the same sampled profile).
std::pair<EstimateWithCI, EstimateWithCI> run_paired_estimator(
    const ReplicatePlan& plan,
    const std::function<std::pair<double, double>(std::size_t)>& estimand,
    unsigned workers = 0);

}  // namespace netshare
