#include "ocean/parallel.hpp"

#include <atomic>

namespace ocean {

namespace {
std::atomic<int> g_workers{0};  // 0 = hardware default
}

int worker_count() {
  int n = g_workers.load(std::memory_order_relaxed);
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_worker_count(int n) { g_workers.store(n, std::memory_order_relaxed); }

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
  if (n == 0) return;
  int workers = std::min<size_t>(worker_count(), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  // Hand out chunks whose boundaries depend only on n, not on the worker
  // count, so per-chunk work is identical however it is scheduled.
  constexpr size_t kChunk = 256;
  size_t chunks = (n + kChunk - 1) / kChunk;
  std::atomic<size_t> next{0};
  auto body = [&]() {
    for (;;) {
      size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      size_t lo = c * kChunk;
      size_t hi = std::min(n, lo + kChunk);
      fn(lo, hi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace ocean
