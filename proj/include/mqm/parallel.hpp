#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mqm {

/// Worker count: `requested` if positive, otherwise the hardware count.
inline unsigned resolve_workers(int requested) {
  if (requested > 0)
    return static_cast<unsigned>(requested);
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, n) into `workers` contiguous chunks and runs
/// fn(begin, end, chunk) on each. Chunk c always covers the same range for
/// a given (n, workers), so callers can merge per-chunk results in chunk
/// order and stay deterministic. The first exception is rethrown.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    fn(std::size_t{0}, n, 0U);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned c = 0; c < workers; ++c) {
    std::size_t b = n * c / workers, e = n * (c + 1) / workers;
    pool.emplace_back([&, b, e, c] {
      try {
        fn(b, e, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace mqm
