#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace rcp {

// fn(i) for every i in [0, count); each result lands in its index slot, so
// the output is identical for any worker count.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, int jobs, F&& fn) {
  std::vector<R> out(count);
  if (count == 0) return out;
  int workers = jobs < 1 ? 1 : jobs;
  if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        out[i] = fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace rcp
