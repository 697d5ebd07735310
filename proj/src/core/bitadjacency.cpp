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

#include "core/bitadjacency.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "core/rng.hpp"

namespace trillt {

void GraphParams::validate() const {
  if (n < 1) throw_param("vertex count must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw_param("edge probability must lie in (0,1)");
}

void BitAdjacency::reset(int n) {
  if (n < 1) throw_param("vertex count must be at least 1");
  n_ = n;
  wpr_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * wpr_, 0);
}

void BitAdjacency::set_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw_param("vertex index out of range");
  if (u == v) throw_param("self-loops are not representable");
  set_edge_unchecked(u, v);
}

std::int64_t BitAdjacency::edge_count() const noexcept {
  std::int64_t bits = 0;
  for (std::uint64_t w : bits_) bits += std::popcount(w);
  return bits / 2;
}

std::int64_t BitAdjacency::degree(int i) const noexcept {
  std::int64_t d = 0;
  for (std::uint64_t w : row(i)) d += std::popcount(w);
  return d;
}

bool BitAdjacency::well_formed() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (edge(i, i)) return false;
    // padding bits beyond column n-1 must be zero
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(i) * wpr_;
    const int tail_bits = n_ & 63;
    if (tail_bits != 0 && (r[wpr_ - 1] & (~0ull << tail_bits)) != 0) return false;
    for (int j = i + 1; j < n_; ++j) {
      if (edge(i, j) != edge(j, i)) return false;
    }
  }
  return true;
}

BitAdjacency sample_gnp(const GraphParams& params) {
  BitAdjacency adj;
  sample_gnp_into(params, adj);
  return adj;
}

namespace {

// In-place 64x64 bit-matrix transpose, LSB-first columns: the recursive
// block swap exchanges the high half of row k with the low half of row k+j.
void transpose64(std::uint64_t a[64]) noexcept {
  std::uint64_t m = 0x00000000FFFFFFFFull;
  for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
      a[k] ^= t << j;
      a[k + j] ^= t;
    }
  }
}

// Mirrors the strict upper triangle into the lower one, block by block.
void mirror_upper_to_lower(std::uint64_t* bits, int n, std::size_t wpr) noexcept {
  std::uint64_t block[64];
  for (std::size_t bi = 0; bi < wpr; ++bi) {
    for (std::size_t bj = bi; bj < wpr; ++bj) {
      const int row_base = static_cast<int>(bi) << 6;
      for (int r = 0; r < 64; ++r) {
        block[r] = row_base + r < n
                       ? bits[static_cast<std::size_t>(row_base + r) * wpr + bj]
                       : 0;
      }
      transpose64(block);
      const int target_base = static_cast<int>(bj) << 6;
      for (int r = 0; r < 64 && target_base + r < n; ++r) {
        bits[static_cast<std::size_t>(target_base + r) * wpr + bi] |= block[r];
      }
    }
  }
}

}  // namespace

void sample_gnp_into(const GraphParams& params, BitAdjacency& out) {
  params.validate();
  out.reset(params.n);
  const int n = params.n;
  const std::uint64_t threshold = rng::bernoulli_threshold(params.p);
  const rng::Stream stream(params.seed, params.sample_index, rng::StreamTag::graph_edges);
  rng::Sequence words(stream, 0);  // pair index runs lexicographically over (i, j), i < j

  std::uint64_t* bits = out.data();
  const std::size_t wpr = out.words_per_row();
  for (int i = 0; i < n; ++i) {
    std::uint64_t* row_i = bits + static_cast<std::size_t>(i) * wpr;
    int j = i + 1;
    while (j < n) {
      const int w = j >> 6;
      const int end = std::min(n, (w + 1) << 6);
      std::uint64_t acc = 0;
      for (; j < end; ++j) {
        acc |= static_cast<std::uint64_t>(words.next() < threshold) << (j & 63);
      }
      row_i[w] = acc;  // bits below j's start stay zero: j only grows
    }
  }
  mirror_upper_to_lower(bits, n, wpr);
}

std::int64_t codegree(const BitAdjacency& adj, int u, int v) {
  if (u < 0 || v < 0 || u >= adj.n() || v >= adj.n()) throw_param("vertex index out of range");
  if (u == v) throw_param("codegree requires distinct vertices");
  const std::size_t wpr = adj.words_per_row();
  const std::uint64_t* ru = adj.data() + static_cast<std::size_t>(u) * wpr;
  const std::uint64_t* rv = adj.data() + static_cast<std::size_t>(v) * wpr;
  std::int64_t acc = 0;
  for (std::size_t w = 0; w < wpr; ++w) acc += std::popcount(ru[w] & rv[w]);
  return acc;
}

BitAdjacency make_edge_mask(int n, std::span<const Edge> edges) {
  BitAdjacency mask(n);
  for (const Edge& e : edges) mask.set_edge(e.u, e.v);
  return mask;
}

BitAdjacency complement_edge_mask(const BitAdjacency& mask) {
  const int n = mask.n();
  BitAdjacency out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!mask.edge(i, j)) out.set_edge(i, j);
    }
  }
  return out;
}

BitAdjacency restrict_to_edge_set(const BitAdjacency& adj, const BitAdjacency& keep) {
  BitAdjacency out;
  restrict_to_edge_set_into(adj, keep, out);
  return out;
}

void restrict_to_edge_set_into(const BitAdjacency& adj, const BitAdjacency& keep,
                               BitAdjacency& out) {
  if (adj.n() != keep.n()) throw_param("edge set dimension does not match adjacency");
  out.reset(adj.n());
  const std::size_t total = static_cast<std::size_t>(adj.n()) * adj.words_per_row();
  const std::uint64_t* a = adj.data();
  const std::uint64_t* k = keep.data();
  std::uint64_t* o = out.data();
  for (std::size_t w = 0; w < total; ++w) o[w] = a[w] & k[w];
}

void dump_graph(const BitAdjacency& adj, std::ostream& os) {
  const int n = adj.n();
  os << n << '\n';
  for (int i = 0; i < n; ++i) {
    // lower-triangle bits j < i, little-endian nibbles
    std::string hex;
    std::uint32_t nibble = 0;
    for (int j = 0; j < i; ++j) {
      if (adj.edge(i, j)) nibble |= 1u << (j & 3);
      if ((j & 3) == 3 || j == i - 1) {
        hex += "0123456789abcdef"[nibble];
        nibble = 0;
      }
    }
    if (hex.empty()) hex = "0";
    os << hex << '\n';
  }
}

BitAdjacency load_graph(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 1) throw_io("bad graph dump header");
  BitAdjacency adj(n);
  std::string line;
  for (int i = 0; i < n; ++i) {
    if (!(is >> line)) throw_io("truncated graph dump");
    for (int j = 0; j < i; ++j) {
      const std::size_t pos = static_cast<std::size_t>(j) >> 2;
      if (pos >= line.size()) throw_io("short row in graph dump");
      const char c = line[pos];
      const int nibble = (c >= '0' && c <= '9')   ? c - '0'
                         : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                         : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                                  : -1;
      if (nibble < 0) throw_io("bad hex digit in graph dump");
      if ((nibble >> (j & 3)) & 1) adj.set_edge(i, j);
    }
  }
  return adj;
}

}  // namespace trillt
