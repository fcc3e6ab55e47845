// arglab :: contiguous index-range sharding
//
// Exhaustive sweeps (profile searches, censuses) split their index space
// into contiguous shards, run one worker per shard, and merge per-shard
// results in shard order, which keeps every outcome independent of
// scheduling.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace arglab::detail {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> plan_shards(std::uint64_t total,
                                                                        std::size_t max_shards) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  if (total == 0 || max_shards == 0) return ranges;
  std::uint64_t shards = std::min<std::uint64_t>(max_shards, total);
  std::uint64_t chunk = (total + shards - 1) / shards;
  for (std::uint64_t begin = 0; begin < total; begin += chunk)
    ranges.emplace_back(begin, std::min(begin + chunk, total));
  return ranges;
}

inline std::size_t default_worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 4 : std::min<unsigned>(hw, 16);
}

// Runs work(shard_index) on its own thread per shard. Workers must confine
// writes to their own shard's slot.
inline void run_shards(std::size_t shard_count, const std::function<void(std::size_t)>& work) {
  if (shard_count == 0) return;
  if (shard_count == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(shard_count);
  for (std::size_t s = 0; s < shard_count; ++s) pool.emplace_back(work, s);
  for (auto& t : pool) t.join();
}

}  // namespace arglab::detail
