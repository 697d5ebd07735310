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

#include "core/bitadjacency.hpp"

namespace trillt {

/// Triangle tally split by how many of the triangle's edges fall in a
/// distinguished edge set. c0+c1+c2+c3 always equals the total count.
struct PartitionedCounts {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;

  std::int64_t total() const noexcept { return c0 + c1 + c2 + c3; }
};

/// Exact triangle count. Sums |N(u) ∩ N(v)| over edges {u,v}, which counts
/// each triangle three times. Exact in 64 bits for n up to 2000.
std::int64_t count_triangles(const BitAdjacency& adj);

/// Classifies every triangle by |edges ∩ special| in {0,1,2,3}.
PartitionedCounts count_partitioned(const BitAdjacency& adj, const BitAdjacency& special);

/// Standardized count (s - p^3 C(n,3)) / sigma_n. Requires n >= 4.
double normalize_count(std::int64_t s, int n, double p);

}  // namespace trillt
