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

#include "core/triangles.hpp"

#include <bit>
#include <cmath>

#include "core/moments.hpp"

namespace trillt {

namespace {

// Clears bits 0..i of a word (used to walk only j > i within row i).
inline std::uint64_t clear_through(std::uint64_t word, int i) noexcept {
  return word & ~((2ull << i) - 1);
}

}  // namespace

namespace {

// Sum over edges {i,j} of |N(i) ∩ N(j)|, which is three times the triangle
// count. Compile-time word count keeps the intersection loop unrolled for
// the n <= 256 hot sizes.
template <std::size_t WPR>
std::uint64_t wedge_sum_fixed(const std::uint64_t* bits, int n) noexcept {
  std::uint64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* row_i = bits + static_cast<std::size_t>(i) * WPR;
    for (std::size_t w = static_cast<std::size_t>(i) >> 6; w < WPR; ++w) {
      std::uint64_t word = row_i[w];
      if (w == (static_cast<std::size_t>(i) >> 6)) word = clear_through(word, i & 63);
      while (word) {
        const int j = static_cast<int>(w << 6) + std::countr_zero(word);
        word &= word - 1;
        const std::uint64_t* row_j = bits + static_cast<std::size_t>(j) * WPR;
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < WPR; ++t) {
          acc += static_cast<unsigned>(std::popcount(row_i[t] & row_j[t]));
        }
        sum += acc;
      }
    }
  }
  return sum;
}

std::uint64_t wedge_sum_generic(const std::uint64_t* bits, int n, std::size_t wpr) noexcept {
  std::uint64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* row_i = bits + static_cast<std::size_t>(i) * wpr;
    for (std::size_t w = static_cast<std::size_t>(i) >> 6; w < wpr; ++w) {
      std::uint64_t word = row_i[w];
      if (w == (static_cast<std::size_t>(i) >> 6)) word = clear_through(word, i & 63);
      while (word) {
        const int j = static_cast<int>(w << 6) + std::countr_zero(word);
        word &= word - 1;
        const std::uint64_t* row_j = bits + static_cast<std::size_t>(j) * wpr;
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < wpr; ++t) {
          acc += static_cast<unsigned>(std::popcount(row_i[t] & row_j[t]));
        }
        sum += acc;
      }
    }
  }
  return sum;
}

}  // namespace

std::int64_t count_triangles(const BitAdjacency& adj) {
  const int n = adj.n();
  const std::size_t wpr = adj.words_per_row();
  const std::uint64_t* bits = adj.data();
  std::uint64_t wedge_sum = 0;
  switch (wpr) {
    case 1: wedge_sum = wedge_sum_fixed<1>(bits, n); break;
    case 2: wedge_sum = wedge_sum_fixed<2>(bits, n); break;
    case 3: wedge_sum = wedge_sum_fixed<3>(bits, n); break;
    case 4: wedge_sum = wedge_sum_fixed<4>(bits, n); break;
    default: wedge_sum = wedge_sum_generic(bits, n, wpr); break;
  }
  return static_cast<std::int64_t>(wedge_sum / 3);
}

PartitionedCounts count_partitioned(const BitAdjacency& adj, const BitAdjacency& special) {
  if (adj.n() != special.n()) throw_param("edge set dimension does not match adjacency");
  const int n = adj.n();
  const std::size_t wpr = adj.words_per_row();
  const std::uint64_t* bits = adj.data();

  PartitionedCounts counts;
  std::int64_t* buckets[4] = {&counts.c0, &counts.c1, &counts.c2, &counts.c3};

  for (int i = 0; i < n; ++i) {
    const std::uint64_t* row_i = bits + static_cast<std::size_t>(i) * wpr;
    for (int j = i + 1; j < n; ++j) {
      if (!adj.edge(i, j)) continue;
      const std::uint64_t* row_j = bits + static_cast<std::size_t>(j) * wpr;
      const int in_ij = special.edge(i, j) ? 1 : 0;
      // common neighbors k > j close a triangle exactly once per triple
      for (std::size_t w = static_cast<std::size_t>(j) >> 6; w < wpr; ++w) {
        std::uint64_t word = row_i[w] & row_j[w];
        if (w == (static_cast<std::size_t>(j) >> 6)) word = clear_through(word, j & 63);
        while (word) {
          const int k = static_cast<int>(w << 6) + std::countr_zero(word);
          word &= word - 1;
          const int members = in_ij + (special.edge(i, k) ? 1 : 0) + (special.edge(j, k) ? 1 : 0);
          ++*buckets[members];
        }
      }
    }
  }
  return counts;
}

double normalize_count(std::int64_t s, int n, double p) {
  if (n < 4) throw_param("normalized count needs n >= 4");
  const double sigma = std::sqrt(variance_triangles(n, p));
  return (static_cast<double>(s) - mean_triangles(n, p)) / sigma;
}

}  // namespace trillt
