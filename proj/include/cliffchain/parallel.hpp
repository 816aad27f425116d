#pragma once

#include <cstdlib>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace cliffchain {

/// Thread budget: CLIFFCHAIN_THREADS if set, else hardware concurrency.
inline int thread_budget() {
  if (const char* env = std::getenv("CLIFFCHAIN_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Chunked parallel map over [0, n); fn(i) must be independent per index.
/// Results are merged in index order, so output is deterministic.
template <typename T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& fn) {
  int threads = thread_budget();
  if (threads <= 1 || n < 64) {
    std::vector<T> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
  }
  size_t chunk = (n + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
  std::vector<std::future<std::vector<T>>> futures;
  for (size_t begin = 0; begin < n; begin += chunk) {
    size_t end = std::min(n, begin + chunk);
    futures.push_back(std::async(std::launch::async, [begin, end, &fn] {
      std::vector<T> part;
      part.reserve(end - begin);
      for (size_t i = begin; i < end; ++i) part.push_back(fn(i));
      return part;
    }));
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& f : futures) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cliffchain
