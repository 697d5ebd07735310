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

#include <cstdint>

namespace trillt::rng {

// SplitMix64 finalizer. Bijective on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// Domain separators so unrelated consumers of the same (seed, sample_index)
// never read the same words.
enum class StreamTag : std::uint64_t {
  graph_edges = 0x6772617068656467ull,
  bipartite_a = 0x6269706172742D61ull,
  bipartite_b = 0x6269706172742D62ull,
};

// Counter-based random word stream keyed by (seed, sample_index, tag).
// word(i) is a pure function of the key and i, so results do not depend on
// which thread or process consumes which index.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t sample_index, StreamTag tag) noexcept
      : base_(mix64(mix64(mix64(seed + kGamma) ^ static_cast<std::uint64_t>(tag)) +
                    sample_index)) {}

  std::uint64_t word(std::uint64_t index) const noexcept {
    return mix64(base_ + index * kGamma);
  }

 private:
  friend class Sequence;
  std::uint64_t base_;
};

// Sequential cursor over a stream; next() walks word(start), word(start+1), ...
class Sequence {
 public:
  Sequence(const Stream& stream, std::uint64_t start_index) noexcept
      : state_(stream.base_ + start_index * kGamma) {}

  std::uint64_t next() noexcept {
    const std::uint64_t out = mix64(state_);
    state_ += kGamma;
    return out;
  }

 private:
  std::uint64_t state_;
};

// Threshold such that P[word < threshold] matches p to a few ulp.
// Saturates at UINT64_MAX for p within 2^-53 of 1, which forces every edge;
// tests exercising the p -> 1 limit rely on this.
inline std::uint64_t bernoulli_threshold(double p) noexcept {
  const double scaled = p * 0x1p64;
  if (scaled >= 0x1p64) return UINT64_MAX;
  if (scaled <= 0.0) return 0;
  return static_cast<std::uint64_t>(scaled);
}

}  // namespace trillt::rng
