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

// Reference oracles for the fast kernels. Everything here is deliberately
// naive: triple loops, per-mask enumeration, direct case analysis.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "core/bitadjacency.hpp"
#include "core/triangles.hpp"

namespace trillt::testing {

inline std::int64_t naive_codegree(const BitAdjacency& adj, int u, int v) {
  std::int64_t count = 0;
  for (int w = 0; w < adj.n(); ++w) {
    if (w == u || w == v) continue;
    if (adj.edge(u, w) && adj.edge(v, w)) ++count;
  }
  return count;
}

inline std::int64_t triple_loop_triangles(const BitAdjacency& adj) {
  std::int64_t count = 0;
  const int n = adj.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj.edge(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (adj.edge(i, k) && adj.edge(j, k)) ++count;
      }
    }
  }
  return count;
}

inline PartitionedCounts triple_loop_partitioned(const BitAdjacency& adj,
                                                 const BitAdjacency& special) {
  PartitionedCounts counts;
  std::int64_t* buckets[4] = {&counts.c0, &counts.c1, &counts.c2, &counts.c3};
  const int n = adj.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj.edge(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (adj.edge(i, k) && adj.edge(j, k)) {
          const int members = (special.edge(i, j) ? 1 : 0) + (special.edge(i, k) ? 1 : 0) +
                              (special.edge(j, k) ? 1 : 0);
          ++*buckets[members];
        }
      }
    }
  }
  return counts;
}

// Exact E[S_n] and Var[S_n] by walking every edge mask with per-mask triple
// loop recounts. Independent of the Gray-code enumerator and of the closed
// forms. Feasible through n = 7.
struct EnumeratedStats {
  double mean = 0.0;
  double variance = 0.0;
  double third_central = 0.0;
};

inline EnumeratedStats enumerate_triangle_stats(int n, double p) {
  const int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }

  long double mean = 0.0L, second = 0.0L, third = 0.0L;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    BitAdjacency adj(n);
    int bits = 0;
    for (int b = 0; b < m; ++b) {
      if ((mask >> b) & 1) {
        adj.set_edge(edges[static_cast<std::size_t>(b)].first,
                     edges[static_cast<std::size_t>(b)].second);
        ++bits;
      }
    }
    const long double weight = std::pow(static_cast<long double>(p), bits) *
                               std::pow(static_cast<long double>(1 - p), m - bits);
    const long double s = static_cast<long double>(triple_loop_triangles(adj));
    mean += weight * s;
    second += weight * s * s;
    third += weight * s * s * s;
  }
  EnumeratedStats out;
  out.mean = static_cast<double>(mean);
  out.variance = static_cast<double>(second - mean * mean);
  out.third_central =
      static_cast<double>(third - 3.0L * mean * second + 2.0L * mean * mean * mean);
  return out;
}

// E[(X_t - p^3)(X_t' - p^3)] for two triangles sharing exactly one edge, by
// enumerating the 2^5 joint outcomes of their five edges.
inline double enumerate_edge_share_covariance(double p) {
  // edges: 0 = shared, {1,2} close triangle t, {3,4} close triangle t'
  long double acc = 0.0L;
  const long double p3 = static_cast<long double>(p) * p * p;
  for (int mask = 0; mask < 32; ++mask) {
    int bits = 0;
    for (int b = 0; b < 5; ++b) bits += (mask >> b) & 1;
    const long double weight = std::pow(static_cast<long double>(p), bits) *
                               std::pow(static_cast<long double>(1 - p), 5 - bits);
    const int xt = ((mask & 1) && (mask & 2) && (mask & 4)) ? 1 : 0;
    const int xt2 = ((mask & 1) && (mask & 8) && (mask & 16)) ? 1 : 0;
    acc += weight * (xt - p3) * (xt2 - p3);
  }
  return static_cast<double>(acc);
}

// Fuzz graphs driven by a test-local generator, unrelated to the library's
// counter stream.
inline BitAdjacency random_graph(std::mt19937_64& gen, int n, double density) {
  BitAdjacency adj(n);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(gen)) adj.set_edge(i, j);
    }
  }
  return adj;
}

inline BitAdjacency random_mask(std::mt19937_64& gen, int n, double density) {
  return random_graph(gen, n, density);
}

}  // namespace trillt::testing
