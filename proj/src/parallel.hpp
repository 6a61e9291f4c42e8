#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace odrc::detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is handed
// out by an atomic counter; callers write results into per-index slots so the
// merged output never depends on scheduling.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace odrc::detail
