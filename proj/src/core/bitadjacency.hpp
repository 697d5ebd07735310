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
#include <iosfwd>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace trillt {

/// Parameters of one G(n,p) draw. Equal parameter tuples always produce
/// bit-identical graphs, regardless of thread or process count.
struct GraphParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;

  void validate() const;
};

struct Edge {
  int u = 0;
  int v = 0;
};

/// Bit-packed symmetric adjacency matrix with zero diagonal. Rows are padded
/// to 64-bit words and padding bits stay zero, so popcount kernels can scan
/// whole words. Immutable once built; safe to share read-only across threads.
class BitAdjacency {
 public:
  BitAdjacency() = default;
  explicit BitAdjacency(int n) { reset(n); }

  void reset(int n);

  int n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  const std::uint64_t* data() const noexcept { return bits_.data(); }
  std::uint64_t* data() noexcept { return bits_.data(); }

  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * wpr_, wpr_};
  }

  bool edge(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * wpr_ + (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) & 1u;
  }

  /// Sets both (u,v) and (v,u); u == v or out-of-range is a parameter error.
  void set_edge(int u, int v);

  std::int64_t edge_count() const noexcept;
  std::int64_t degree(int i) const noexcept;

  /// Invariant probe used by tests: symmetry, zero diagonal, clean padding.
  bool well_formed() const noexcept;

  bool operator==(const BitAdjacency& other) const noexcept {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void set_edge_unchecked(int u, int v) noexcept {
    bits_[static_cast<std::size_t>(u) * wpr_ + (static_cast<std::size_t>(v) >> 6)] |=
        1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * wpr_ + (static_cast<std::size_t>(u) >> 6)] |=
        1ull << (u & 63);
  }

  friend void sample_gnp_into(const GraphParams&, BitAdjacency&);

  int n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Draws G(n,p): every unordered pair becomes an edge independently with
/// probability p, driven by a counter-based stream over pair indices.
BitAdjacency sample_gnp(const GraphParams& params);

/// Same draw, reusing the target's storage. Hot path for Monte Carlo loops.
void sample_gnp_into(const GraphParams& params, BitAdjacency& out);

/// |N(u) ∩ N(v)| via word-wise intersection and popcount.
std::int64_t codegree(const BitAdjacency& adj, int u, int v);

/// Builds an adjacency-shaped edge mask from an explicit edge list.
BitAdjacency make_edge_mask(int n, std::span<const Edge> edges);

/// Mask holding every unordered pair not present in `mask`.
BitAdjacency complement_edge_mask(const BitAdjacency& mask);

/// Adjacency containing exactly the edges of `adj` that lie in `keep`.
BitAdjacency restrict_to_edge_set(const BitAdjacency& adj, const BitAdjacency& keep);
void restrict_to_edge_set_into(const BitAdjacency& adj, const BitAdjacency& keep,
                               BitAdjacency& out);

// Debug fixture format: one line "n", then the lower-triangle bits of each
// row as little-endian hex.
void dump_graph(const BitAdjacency& adj, std::ostream& os);
BitAdjacency load_graph(std::istream& is);

}  // namespace trillt
