#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace garnorm {

/// Number of workers used by the exhaustive scans; 0 means "hardware".
std::size_t default_workers();
void set_default_workers(std::size_t n);

/// Runs body(chunk_index, begin, end) over [0, n) split into contiguous
/// chunks, one per worker. Chunk boundaries depend only on `n` and the
/// worker count, and callers combine per-chunk results in chunk order, so
/// results do not depend on scheduling.
template <typename Body>
std::size_t parallel_chunks(std::size_t n, Body&& body, std::size_t workers = 0) {
  if (workers == 0) workers = default_workers();
  workers = std::max<std::size_t>(1, std::min(workers, n));
  const std::size_t step = (n + workers - 1) / std::max<std::size_t>(workers, 1);
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t c = 0; c < workers; ++c) {
      const std::size_t b = c * step;
      const std::size_t e = std::min(n, b + step);
      pool.emplace_back([&, c, b, e] {
        try {
          body(c, b, e);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return workers;
}

}  // namespace garnorm
