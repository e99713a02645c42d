#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace smt {

/// Worker count: SMT_THREADS if set and positive, else `fallback`, else the
/// value given to set_default_threads, else the hardware concurrency.
int thread_count(int fallback = 0);

/// Process-wide default used when neither SMT_THREADS nor a fallback is set.
void set_default_threads(int threads);

/// out[i] = f(i) for i < n, computed on a small worker pool. Results land in
/// input order whatever the scheduling; the first exception is rethrown.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& f, int threads = 0) {
  std::vector<R> out(n);
  const int workers = std::max(1, std::min<int>(thread_count(threads), static_cast<int>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace smt
