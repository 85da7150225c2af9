#pragma once
// Deterministic worker-pool helpers.
//
// Every parallel sweep in the library follows the same discipline: the item
// range is split into one contiguous chunk per worker, workers own private
// accumulators, and the caller merges them in worker order.  Results are
// therefore bit-identical for any worker count.

#include <cstdint>
#include <thread>
#include <vector>

namespace fibspec {

// Resolves a worker count: requested > 0 wins; otherwise the
// FIBSPEC_PARALLELISM environment variable; otherwise hardware concurrency.
int resolve_workers(int requested);

// Runs fn(worker_index, begin, end) on each of `workers` contiguous chunks of
// [0, items).  Chunk boundaries depend only on (items, workers).  fn must not
// touch shared mutable state.
template <typename Fn>
void run_partitioned(std::uint64_t items, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (items == 0) return;
  std::uint64_t w = static_cast<std::uint64_t>(workers);
  if (w > items) w = items;
  if (w == 1) {
    fn(0, std::uint64_t{0}, items);
    return;
  }
  std::uint64_t chunk = items / w;
  std::uint64_t extra = items % w;
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < w; ++i) {
    std::uint64_t len = chunk + (i < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    pool.emplace_back([&fn, i, begin, end] { fn(static_cast<int>(i), begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace fibspec
