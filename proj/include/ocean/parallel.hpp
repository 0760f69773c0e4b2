#ifndef OCEAN_PARALLEL_HPP
#define OCEAN_PARALLEL_HPP

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace ocean {

// Process-wide worker budget, set once by the CLI --threads flag.
int worker_count();
void set_worker_count(int n);

// Runs fn(begin, end) over disjoint chunks of [0, n). Results must be written
// to disjoint locations; the chunking is independent of the thread count, so
// outputs are identical for any --threads value.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

// Deterministic reduction: partial sums are accumulated per fixed-size chunk
// and combined left-to-right. Chunk boundaries do not depend on the thread
// count, so the floating-point result is bit-stable under any parallelism.
template <typename T, typename Fn>
T deterministic_sum(size_t n, T init, Fn term) {
  constexpr size_t kChunk = 1024;
  size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<T> partial(chunks, init);
  parallel_for(chunks, [&](size_t c0, size_t c1) {
    for (size_t c = c0; c < c1; ++c) {
      T acc = init;
      size_t hi = std::min(n, (c + 1) * kChunk);
      for (size_t i = c * kChunk; i < hi; ++i) acc += term(i);
      partial[c] = acc;
    }
  });
  T total = init;
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace ocean

#endif
