#ifndef RICCIFORGE_PARALLEL_HPP
#define RICCIFORGE_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ricciforge {

/// Runs fn(i) for i in [0, count) on up to max_threads workers.  Results are
/// written by index, so the outcome is independent of scheduling.
inline void parallel_for(int count, int max_threads, const std::function<void(int)>& fn) {
  if (max_threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<int> next{0};
  int n_workers = std::min(max_threads, count);
  for (int w = 0; w < n_workers; ++w)
    workers.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : workers) t.join();
}

}  // namespace ricciforge

#endif
