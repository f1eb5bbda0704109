#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace z4cb::detail {

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// fn(begin, end, worker). The first exception thrown by any worker is
/// rethrown after all workers have joined.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    fn(std::size_t{0}, count, 0U);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end, w] {
      try {
        if (begin < end) fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace z4cb::detail
