#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace isemlab {

/// Applies fn to 0 .. count-1, possibly across threads. Results land in
/// index order, so the output never depends on the worker count. The first
/// exception thrown by fn is rethrown after all workers join.
template <typename R, typename Fn>
std::vector<R> parallel_map(int count, int workers, Fn&& fn) {
  std::vector<R> results(count);
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    while (!failed.load()) {
      int i = next.fetch_add(1);
      if (i >= count) break;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  int spawned = std::min(workers, count);
  pool.reserve(spawned);
  for (int w = 0; w < spawned; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace isemlab
