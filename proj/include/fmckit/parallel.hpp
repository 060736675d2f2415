#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fmckit {

// Worker cap: FMCKIT_THREADS if set to a positive integer, else the hardware count.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FMCKIT_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

// Runs f(chunk) for chunk in [0, chunks) over at most worker_count() threads.
// Results are returned in chunk order.
template <class R, class F>
std::vector<R> parallel_chunks(std::size_t chunks, F&& f) {
  std::vector<R> results(chunks);
  const std::size_t workers = std::min<std::size_t>(worker_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) results[c] = f(c);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) results[c] = f(c);
    });
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace fmckit
