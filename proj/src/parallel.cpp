#include "bolext/parallel.hpp"

namespace bolext {

namespace {
std::atomic<std::size_t> g_workers{0};
}

std::size_t worker_count() {
  std::size_t n = g_workers.load();
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return n;
}

void set_worker_count(std::size_t n) { g_workers.store(n); }

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn,
                     std::size_t* chunk_count_out) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(worker_count(), total));
  if (chunk_count_out) *chunk_count_out = chunks;
  auto bounds = [&](std::size_t c) { return total / chunks * c + std::min<std::uint64_t>(c, total % chunks); };
  if (chunks == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, const std::function<bool(std::uint64_t)>& pred) {
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  parallel_chunks(total, [&](std::size_t, std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t i = first; i < last; ++i) {
      if (i > best.load(std::memory_order_relaxed)) return;
      if (pred(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  std::uint64_t b = best.load();
  if (b == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b;
}

}  // namespace bolext
