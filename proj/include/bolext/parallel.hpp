#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace bolext {

/// Worker count for brute-force enumerations (0 means hardware concurrency).
std::size_t worker_count();
void set_worker_count(std::size_t n);

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// fn(chunk_index, first, last) on each. Chunks are ordered, so callers that
/// store per-chunk results and concatenate them get a deterministic order.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn,
                     std::size_t* chunk_count_out = nullptr);

/// Smallest index in [0, total) satisfying pred, searched in parallel with early exit.
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total,
                                                 const std::function<bool(std::uint64_t)>& pred);

/// Runs fn(first, last, out) per chunk and concatenates the chunk outputs in index order.
template <class T>
std::vector<T> parallel_collect(std::uint64_t total,
                                const std::function<void(std::uint64_t, std::uint64_t, std::vector<T>&)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::uint64_t>(worker_count(), total));
  std::vector<std::vector<T>> parts(workers);
  parallel_chunks(total, [&](std::size_t chunk, std::uint64_t first, std::uint64_t last) {
    fn(first, last, parts[chunk]);
  });
  std::vector<T> out;
  for (auto& p : parts) {
    for (auto& x : p) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace bolext
