#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace tourlab {

// Runs fn(chunk, begin, end) over [0, count) split into contiguous chunks,
// one worker thread per chunk (inline when a single chunk suffices).  Chunk
// boundaries depend only on count and jobs, and callers merge any per-chunk
// output in chunk order, so results are identical for every jobs value.
template <class Fn>
void run_chunked(std::uint64_t count, int jobs, Fn&& fn) {
  if (count == 0) return;
  const std::uint64_t workers = std::min<std::uint64_t>(jobs < 1 ? 1 : jobs, count);
  if (workers <= 1) {
    fn(std::uint64_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t c = 0; c < workers; ++c) {
    const std::uint64_t begin = count / workers * c + std::min(c, count % workers);
    const std::uint64_t end = count / workers * (c + 1) + std::min(c + 1, count % workers);
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace tourlab
