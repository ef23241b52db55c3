#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mf::detail {

// results[i] = fn(i), computed by `jobs` threads pulling indices from a shared
// counter. Output order depends only on i, never on scheduling.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(jobs < 1 ? 1 : jobs, count);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace mf::detail
