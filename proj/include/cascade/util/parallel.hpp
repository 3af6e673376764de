#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cascade {

// Counting semaphore with a runtime-configured limit. Caps in-flight backend
// requests per client.
class Semaphore {
 public:
  explicit Semaphore(int count) : count_(count) {}

  void acquire() {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [&] { return count_ > 0; });
    --count_;
  }

  void release() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      ++count_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int count_;
};

class SemaphoreGuard {
 public:
  explicit SemaphoreGuard(Semaphore& s) : s_(s) { s_.acquire(); }
  ~SemaphoreGuard() { s_.release(); }
  SemaphoreGuard(const SemaphoreGuard&) = delete;
  SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

 private:
  Semaphore& s_;
};

// Applies fn to indices 0..n-1 with at most `parallelism` workers. Results
// are written to index-stable slots, so output order matches input order.
// The first exception thrown by any item is rethrown after all workers stop.
template <typename R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& fn,
                            int parallelism) {
  std::vector<R> results(n);
  if (n == 0) return results;
  if (parallelism < 1) parallelism = 1;
  size_t workers = std::min<size_t>(static_cast<size_t>(parallelism), n);
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }

  std::mutex mu;
  size_t next = 0;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (first_error || next >= n) return;
          i = next++;
        }
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace cascade
