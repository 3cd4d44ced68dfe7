#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace turan2d {

/// Runs fn(i) for i in [0, count) across `jobs` threads.  Callers own
/// determinism: collect per-index results and merge in index order.
inline void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> threads;
  int spawn = std::min<int>(jobs, static_cast<int>(count));
  threads.reserve(spawn);
  for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
}

}  // namespace turan2d
