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
#include <vector>

#include "core/bitadjacency.hpp"
#include "core/oracle.hpp"

namespace trillt {

/// Frequency table of the triangle count over independent G(n,p) draws.
/// Deterministic for fixed (n, p, seed) regardless of thread count.
PmfTable empirical_pmf(const GraphParams& params, std::uint64_t samples, int threads = 1);

/// Predicted point probability: N((k - mu_n)/sigma_n) / sigma_n with N the
/// standard normal density. Requires n >= 4.
double discrete_gaussian_reference(std::int64_t k, int n, double p);

struct DiscrepancyPoint {
  std::int64_t k = 0;
  double x = 0.0;                // lattice point (k - mu)/sigma
  double scaled_empirical = 0.0; // sigma * p_hat(k)
  double gaussian = 0.0;         // N(x)
  double gap = 0.0;              // |scaled_empirical - gaussian|
};

struct DiscrepancyReport {
  int n = 0;
  double p = 0.0;
  PmfKind kind = PmfKind::exact;
  std::uint64_t sample_count = 0;
  double sup_discrepancy = 0.0;
  std::int64_t argmax_k = 0;
  double argmax_x = 0.0;
  double mc_error_bound = 0.0;  // max_k sigma sqrt(p_hat (1-p_hat) / m), 0 for exact tables
  std::vector<DiscrepancyPoint> per_point;
};

/// Sup over lattice points of |sigma p_hat(x) - N(x)|, scanned over the pmf
/// support plus a 4 sigma margin of zero-mass points on each side. Empirical
/// tables whose Monte Carlo error bound exceeds N(0)/2 are refused as
/// underpowered.
DiscrepancyReport sup_discrepancy(const PmfTable& pmf, int n, double p);

/// Certain-refusal floor for sup_discrepancy sample counts, from the
/// closed-form sigma: below this even the predicted modal error exceeds the
/// gate. Lets callers refuse hopeless runs before sampling. Near the floor
/// the realized bound may still refuse.
std::uint64_t minimum_llt_samples(int n, double p);

struct ModQResult {
  int q = 0;
  std::uint64_t sample_count = 0;
  std::vector<double> freqs;  // residue -> frequency
  double max_dev = 0.0;       // max_a |freqs[a] - 1/q|
};

/// Residue frequencies of S_n mod q over independent draws.
ModQResult mod_q_histogram(const GraphParams& params, std::uint64_t samples, int q,
                           int threads = 1);

/// Residue marginals of an exact pmf table (the fixture path).
ModQResult mod_q_from_pmf(const PmfTable& pmf, int q);

}  // namespace trillt
