#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dlab {

/// Worker cap shared by all parallel loops. DISSIPATOR_LAB_THREADS overrides
/// the hardware count; values < 1 are ignored.
inline int max_threads() {
  static const int cap = [] {
    if (const char* env = std::getenv("DISSIPATOR_LAB_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
  }();
  return cap;
}

/// Runs fn(0) .. fn(n-1), possibly on several threads. Results must go to
/// disjoint slots; iteration order is unspecified.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(max_threads(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto drain = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace dlab
