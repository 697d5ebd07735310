// Copyright 2026 The trillt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace trillt {

// Work is cut into fixed-width shards no matter how many threads run, and
// shard results are merged in shard order. That keeps every reduction,
// including floating-point ones, byte-identical across thread counts.
constexpr std::uint64_t kShardSize = 1ull << 16;

inline std::uint64_t shard_count(std::uint64_t total) {
  return total == 0 ? 0 : (total + kShardSize - 1) / kShardSize;
}

/// Runs work(state[s], begin, end) over every shard s and returns the
/// per-shard states in index order.
template <class State, class Work>
std::vector<State> run_sharded(std::uint64_t total, int threads, Work work) {
  const std::uint64_t shards = shard_count(total);
  std::vector<State> states(shards);
  if (shards == 0) return states;

  std::atomic<std::uint64_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::uint64_t s = next.fetch_add(1, std::memory_order_relaxed);
      if (s >= shards) break;
      const std::uint64_t begin = s * kShardSize;
      const std::uint64_t end = std::min(total, begin + kShardSize);
      work(states[s], begin, end);
    }
  };

  if (threads <= 1 || shards == 1) {
    drain();
    return states;
  }
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::uint64_t>(threads, shards));
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  return states;
}

}  // namespace trillt
