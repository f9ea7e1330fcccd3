#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace isokit {

/// Runs body(begin, end, worker) over [0, count) split into contiguous
/// blocks, one per worker. With threads <= 1 everything runs inline.
template <typename Body>
void parallel_blocks(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2) {
    body(std::size_t{0}, count, 0U);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, b, e, w] { body(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace isokit
