#include "rncdr/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rncdr {

unsigned thread_count() {
  if (const char* env = std::getenv("CRNCDR_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

void run_workers(size_t n, const std::function<void(std::atomic<size_t>&)>& worker) {
  unsigned nt = thread_count();
  if (nt > n) nt = static_cast<unsigned>(n);
  std::atomic<size_t> next{0};
  if (nt <= 1) {
    worker(next);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      try {
        worker(next);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
        next.store(n);
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
  if (n == 0) return;
  run_workers(n, [&](std::atomic<size_t>& next) {
    for (size_t i = next++; i < n; i = next++) body(i);
  });
}

std::optional<size_t> parallel_find_first(size_t n, const std::function<bool(size_t)>& pred) {
  if (n == 0) return std::nullopt;
  std::atomic<size_t> best{n};
  run_workers(n, [&](std::atomic<size_t>& next) {
    for (size_t i = next++; i < n; i = next++) {
      if (i >= best.load()) return;
      if (pred(i)) {
        size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  if (best.load() == n) return std::nullopt;
  return best.load();
}

}  // namespace rncdr
