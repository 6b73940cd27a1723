#include "netshare/mc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "netshare/stats.hpp"

namespace netshare {
namespace {

unsigned resolve_workers(unsigned requested, std::size_t replicates) {
  unsigned w = requested;
  if (w == 0) {
    w = std::thread::hardware_concurrency();
    if (w == 0) w = 1;
  }
  if (static_cast<std::size_t>(w) > replicates) w = static_cast<unsigned>(replicates);
  return w;
}

/// Fills values[i] = fn(i) for i in [0, count) using `workers` threads with
/// dynamic chunking. Which thread computes which index is irrelevant: each
/// value depends only on its index.
template <typename Fn>
void parallel_fill(std::size_t count, unsigned workers, const Fn& fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  const std::size_t chunk = std::max<std::size_t>(1, count / (static_cast<std::size_t>(workers) * 16));
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;

  auto body = [&]() {
    try {
      for (;;) {
        const std::size_t begin = cursor.fetch_add(chunk);
        if (begin >= count || failed.load(std::memory_order_relaxed)) break;
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(first_error);
}

void require_replicates(const ReplicatePlan& plan) {
  if (plan.replicate_count() < 2) {
    throw std::invalid_argument("run_estimator: replicate count must be >= 2");
  }
}

EstimateWithCI reduce_in_order(const std::vector<double>& values, const ReplicatePlan& plan,
                               double elapsed) {
  RunningStats acc;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::runtime_error("run_estimator: non-finite estimand value at replicate " +
                               std::to_string(i));
    }
    acc.push(values[i]);
  }
  EstimateWithCI out;
  out.mean = acc.mean();
  out.std_error = acc.std_error();
  out.replicates = values.size();
  out.seed = plan.master_seed();
  out.elapsed_seconds = elapsed;
  return out;
}

}  // namespace

EstimateWithCI run_estimator(const ReplicatePlan& plan,
                             const std::function<double(std::size_t)>& estimand,
                             unsigned workers) {
  require_replicates(plan);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t count = plan.replicate_count();
  std::vector<double> values(count);
  parallel_fill(count, resolve_workers(workers, count),
                [&](std::size_t i) { values[i] = estimand(i); });
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return reduce_in_order(values, plan, elapsed);
}

std::pair<EstimateWithCI, EstimateWithCI> run_paired_estimator(
    const ReplicatePlan& plan,
    const std::function<std::pair<double, double>(std::size_t)>& estimand,
    unsigned workers) {
  require_replicates(plan);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t count = plan.replicate_count();
  std::vector<double> first(count);
  std::vector<double> second(count);
  parallel_fill(count, resolve_workers(workers, count), [&](std::size_t i) {
    const auto [a, b] = estimand(i);
    first[i] = a;
    second[i] = b;
  });
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {reduce_in_order(first, plan, elapsed), reduce_in_order(second, plan, elapsed)};
}

}  // namespace netshare
