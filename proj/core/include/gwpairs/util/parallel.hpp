#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace gwpairs {

/// Worker count: GWPAIRS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Evaluates f(0), ..., f(n-1) on up to worker_count() threads and returns the
/// results in index order. The exception of the lowest failing index is
/// rethrown after all workers stop.
template <class F>
auto parallel_map(size_t n, F f, bool allow_parallel = true) -> std::vector<std::invoke_result_t<F&, size_t>> {
  using R = std::invoke_result_t<F&, size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k = next++; k < n; k = next++) {
      try {
        slots[k].emplace(f(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const size_t threads = allow_parallel ? std::min(n, static_cast<size_t>(worker_count())) : 1;
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace gwpairs
