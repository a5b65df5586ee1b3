#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace photoem {

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 4 : n;
}

// Chunked parallel loop over [0, n). body(i) must be safe to run concurrently
// for distinct i. Falls back to serial for small n.
template <class F>
void parallel_for(std::size_t n, F&& body, std::size_t grain = 64) {
  unsigned nthreads = hardware_threads();
  if (n < 2 * grain || nthreads < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(grain);
      if (begin >= n) return;
      std::size_t end = std::min(begin + grain, n);
      for (std::size_t i = begin; i < end; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace photoem
