#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cansub/valext.hpp"

namespace cansub {

/// All reduced fractions in [0, 1] whose denominator divides `den`, ascending.
std::vector<Rational> fraction_grid(std::int64_t den);

/// fraction_grid(p^exponent * (p+1)): the test grid for h and v; it contains every
/// boundary value p^(-j)/(p+1) with j <= exponent that the case splits use.
std::vector<Rational> boundary_grid(std::int64_t p, int exponent);

/// Same as boundary_grid with 0 and 1 removed.
std::vector<Rational> open_boundary_grid(std::int64_t p, int exponent);

/// Evaluates fn(i) for i in [0, count) on a small worker pool. Results are
/// written by index, so their order never depends on scheduling. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, Fn&& fn, unsigned workers = 0) {
  std::vector<Result> out(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cansub
