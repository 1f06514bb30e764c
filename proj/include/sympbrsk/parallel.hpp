#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace sympbrsk {

/// Maps f over items on up to `jobs` threads. Items are split into
/// contiguous ranges and results land at their input index, so the output
/// is independent of the thread count. The first worker exception is
/// rethrown on the calling thread.
template <class Out, class In, class F>
std::vector<Out> parallel_map(std::span<const In> items, unsigned jobs, F&& f) {
  std::vector<Out> results(items.size());
  const std::size_t n = items.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(items[i]);
    return results;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t lo = 0; lo < n; lo += chunk) {
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, lo, hi] {
        try {
          for (std::size_t i = lo; i < hi; ++i) results[i] = f(items[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace sympbrsk
