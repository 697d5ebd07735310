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

#include <complex>
#include <cstdint>
#include <vector>

#include "core/error.hpp"
#include "core/lattice.hpp"

namespace trillt {

enum class PmfKind { exact, empirical };

/// Probability mass function of the triangle count over integer support.
struct PmfTable {
  int n = 0;
  double p = 0.0;
  PmfKind kind = PmfKind::exact;
  std::uint64_t sample_count = 0;            // 0 for exact tables
  std::vector<std::int64_t> support;         // sorted ascending
  std::vector<double> probs;                 // matching probabilities
  std::vector<std::uint64_t> counts;         // raw frequencies, empirical only

  void validate() const;
  double prob_at(std::int64_t k) const noexcept;  // 0 when k is off-support
};

struct PmfStatistics {
  double mean = 0.0;
  double variance = 0.0;
  std::vector<double> mod_q;  // residue marginals, empty unless q >= 2
};

/// Exact pmf of S_n by exhaustive enumeration of all 2^C(n,2) edge subsets.
/// Walks edge masks in Gray-code order with incremental triangle updates and
/// aggregates an exact integer (triangle count, edge count) histogram, then
/// weights buckets by p^e (1-p)^(m-e). Guarded at n > 7 unless forced;
/// n > 8 is always refused.
PmfTable exact_pmf(int n, double p, bool force = false);

/// Exact mean / variance / residue marginals of a tabulated distribution.
PmfStatistics pmf_statistics(const PmfTable& pmf, int q = 0);

/// psi(t) = sum_k probs[k] exp(i t (k - shift)/scale).
std::complex<double> exact_charfun(const PmfTable& pmf, const LatticeSpec& lattice, double t);

}  // namespace trillt
