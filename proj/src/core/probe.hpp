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
#include <string>
#include <vector>

#include "core/bitadjacency.hpp"
#include "core/triangles.hpp"

namespace trillt {

/// Union of k pairwise-disjoint perfect matchings between the first and last
/// n/2 vertices, built by cyclic shifts, together with its complement F.
struct MatchingPlan {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Edge>> matchings;
  std::vector<Edge> union_edges;  // matchings flattened, matching-major
  BitAdjacency e_mask;            // the union E
  BitAdjacency f_mask;            // complement of E in C([n],2)
};

/// Requires n even and 1 <= k <= n/2 (disjointness bound of the cyclic
/// construction). Matching j pairs u_i with v_{(i+j-1) mod n/2}.
MatchingPlan build_matching_plan(int n, int k);

/// Measured quantities from one conditioning experiment.
struct ProbeReport {
  std::string experiment;  // "decomposition" or "hvector"
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  // matching-union decomposition
  int k = 0;
  PartitionedCounts totals;          // c0..c3 summed over trials
  std::int64_t y_e_min = 0;          // min over trials and edges of Y_e
  double y_e_mean = 0.0;
  double bad_L_freq = 0.0;           // fraction of trials with some Y_e < n p^2 / 2
  double z_mean = 0.0;               // estimate of zeta = E[Z]
  double z_var = 0.0;                // sample variance of Z
  double z_var_bound = 0.0;          // 6 n k^3
  std::vector<double> y_e_means;     // per union edge, matching-major order
  std::vector<std::int64_t> y_e_path_counts;  // m_e per union edge

  // bipartite h-vector experiments
  int u_size = 0;
  double h_coord_mean = 0.0;
  double h_coord_variance = 0.0;
  double h_band_fraction = 0.0;   // |h_e| inside (|U|^0.49, |U|^0.51)
  double lambda_e_freq = 0.0;     // 1 - h_band_fraction
  double lambda_global_freq = 0.0;  // more than |V|^2/4 coordinates out of band
  double good_pair_freq = 0.0;    // |J xor J'| >= n p (1-p)/2, u_size == 1 runs
  double band_lo = 0.0;
  double band_hi = 0.0;
  std::vector<double> h_coord_means;  // per coordinate, when collected
  std::vector<double> h_coord_vars;
};

/// Per trial: samples G, splits triangles by membership in E, tracks the
/// wedge counts Y_e through F only, the bad event {some Y_e < n p^2 / 2},
/// and the mean/variance of Z (triangles with two E-edges).
ProbeReport run_decomposition_trials(const GraphParams& params, const MatchingPlan& plan,
                                     std::uint64_t trials, int threads = 1);

/// Rows indexed by U, columns by V; independent p-biased bits.
struct BipartiteAdjacency {
  int u_size = 0;
  int v_size = 0;
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> rows;

  bool bit(int u, int v) const noexcept {
    return (rows[static_cast<std::size_t>(u) * words_per_row +
                 (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1u;
  }
};

BipartiteAdjacency sample_bipartite(int u_size, int v_size, double p, std::uint64_t seed,
                                    std::uint64_t trial_index, bool prime_copy);

/// Coordinate {v,w} equals sum_u A_u[v] A_u[w] - A'_u[v] A'_u[w], indexed
/// lexicographically over pairs of V.
std::vector<int> h_vector(const BipartiteAdjacency& a, const BipartiteAdjacency& a_prime);

/// Samples (A, A') pairs and measures the h-vector band statistics; for
/// u_size == 1 also the good-pair frequency of the symmetric difference.
ProbeReport run_h_experiments(int n, double p, int u_size, std::uint64_t seed,
                              std::uint64_t trials, int threads = 1,
                              bool collect_coordinates = false);

struct BipartiteSplit {
  std::int64_t s_u = 0;      // triangles inside U
  std::int64_t cross2u = 0;  // two vertices in U
  std::int64_t cross2v = 0;  // two vertices in V
  std::int64_t q_v = 0;      // triangles inside V
  std::int64_t total = 0;
};

/// Splits the triangle count by how vertices fall across U = [0, u_size) and
/// V = the rest; verifies the four parts sum to the total.
BipartiteSplit bipartite_decomposition_check(const BitAdjacency& adj, int u_size);

}  // namespace trillt
