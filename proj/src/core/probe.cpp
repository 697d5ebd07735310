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

#include "core/probe.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace trillt {

MatchingPlan build_matching_plan(int n, int k) {
  if (n < 4 || n % 2 != 0) throw_param("matching plans need an even n >= 4");
  const int half = n / 2;
  // cyclic shifts stay pairwise disjoint up to k = n/2 distinct offsets
  if (k < 1 || k > half) throw_param("matching count must satisfy 1 <= k <= n/2");

  MatchingPlan plan;
  plan.n = n;
  plan.k = k;
  plan.e_mask = BitAdjacency(n);
  for (int j = 1; j <= k; ++j) {
    std::vector<Edge> matching;
    matching.reserve(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) {
      const Edge e{i, half + (i + j - 1) % half};
      matching.push_back(e);
      plan.union_edges.push_back(e);
      plan.e_mask.set_edge(e.u, e.v);
    }
    plan.matchings.push_back(std::move(matching));
  }
  plan.f_mask = complement_edge_mask(plan.e_mask);
  return plan;
}

ProbeReport run_decomposition_trials(const GraphParams& params, const MatchingPlan& plan,
                                     std::uint64_t trials, int threads) {
  params.validate();
  if (plan.n != params.n) throw_param("matching plan size does not match graph parameters");
  if (trials == 0) throw_param("trial budget must be positive");

  const std::size_t edge_count = plan.union_edges.size();
  const double bad_threshold = params.n * params.p * params.p / 2.0;

  struct Shard {
    PartitionedCounts totals;
    std::int64_t y_min = -1;
    std::uint64_t y_sum = 0;
    std::uint64_t bad_trials = 0;
    std::uint64_t z_sum = 0;
    std::uint64_t z_sq_sum = 0;
    std::vector<std::uint64_t> y_e_sums;
  };

  auto states = run_sharded<Shard>(trials, threads, [&](Shard& shard, std::uint64_t begin,
                                                        std::uint64_t end) {
    shard.y_e_sums.assign(edge_count, 0);
    BitAdjacency graph;
    BitAdjacency f_graph;
    GraphParams gp = params;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      gp.sample_index = params.sample_index + trial;
      sample_gnp_into(gp, graph);

      const std::int64_t s = count_triangles(graph);
      const PartitionedCounts counts = count_partitioned(graph, plan.e_mask);
      if (counts.c3 != 0 || counts.total() != s) {
        throw std::logic_error("matching-union decomposition identity violated");
      }
      shard.totals.c0 += counts.c0;
      shard.totals.c1 += counts.c1;
      shard.totals.c2 += counts.c2;
      shard.totals.c3 += counts.c3;

      const std::uint64_t z = static_cast<std::uint64_t>(counts.c2);
      shard.z_sum += z;
      shard.z_sq_sum += z * z;

      restrict_to_edge_set_into(graph, plan.f_mask, f_graph);
      bool bad = false;
      for (std::size_t e = 0; e < edge_count; ++e) {
        const Edge edge = plan.union_edges[e];
        const std::int64_t y = codegree(f_graph, edge.u, edge.v);
        shard.y_e_sums[e] += static_cast<std::uint64_t>(y);
        if (shard.y_min < 0 || y < shard.y_min) shard.y_min = y;
        if (static_cast<double>(y) < bad_threshold) bad = true;
      }
      if (bad) ++shard.bad_trials;
    }
  });

  ProbeReport report;
  report.experiment = "decomposition";
  report.n = params.n;
  report.p = params.p;
  report.seed = params.seed;
  report.trials = trials;
  report.k = plan.k;
  report.z_var_bound = 6.0 * params.n * std::pow(static_cast<double>(plan.k), 3.0);

  std::int64_t y_min = -1;
  std::uint64_t y_sum = 0;
  std::uint64_t bad_trials = 0;
  std::uint64_t z_sum = 0;
  std::uint64_t z_sq_sum = 0;
  std::vector<std::uint64_t> y_e_sums(edge_count, 0);
  for (const Shard& shard : states) {
    if (shard.y_e_sums.empty()) continue;
    report.totals.c0 += shard.totals.c0;
    report.totals.c1 += shard.totals.c1;
    report.totals.c2 += shard.totals.c2;
    report.totals.c3 += shard.totals.c3;
    if (shard.y_min >= 0 && (y_min < 0 || shard.y_min < y_min)) y_min = shard.y_min;
    bad_trials += shard.bad_trials;
    z_sum += shard.z_sum;
    z_sq_sum += shard.z_sq_sum;
    for (std::size_t e = 0; e < edge_count; ++e) {
      y_e_sums[e] += shard.y_e_sums[e];
      y_sum += shard.y_e_sums[e];
    }
  }

  const double t = static_cast<double>(trials);
  report.y_e_min = y_min;
  report.y_e_mean = static_cast<double>(y_sum) / (t * static_cast<double>(edge_count));
  report.bad_L_freq = static_cast<double>(bad_trials) / t;
  report.z_mean = static_cast<double>(z_sum) / t;
  // integer sums make the variance exact up to the final division
  const double mean_sq = report.z_mean * report.z_mean;
  report.z_var = std::max(0.0, static_cast<double>(z_sq_sum) / t - mean_sq);
  for (std::size_t e = 0; e < edge_count; ++e) {
    report.y_e_means.push_back(static_cast<double>(y_e_sums[e]) / t);
    const Edge edge = plan.union_edges[e];
    report.y_e_path_counts.push_back(codegree(plan.f_mask, edge.u, edge.v));
  }
  return report;
}

BipartiteAdjacency sample_bipartite(int u_size, int v_size, double p, std::uint64_t seed,
                                    std::uint64_t trial_index, bool prime_copy) {
  if (u_size < 1 || v_size < 1) throw_param("bipartite dimensions must be positive");
  if (!(p > 0.0 && p < 1.0)) throw_param("edge probability must lie in (0,1)");

  BipartiteAdjacency out;
  out.u_size = u_size;
  out.v_size = v_size;
  out.words_per_row = (static_cast<std::size_t>(v_size) + 63) / 64;
  out.rows.assign(static_cast<std::size_t>(u_size) * out.words_per_row, 0);

  const rng::Stream stream(seed, trial_index,
                           prime_copy ? rng::StreamTag::bipartite_b : rng::StreamTag::bipartite_a);
  const std::uint64_t threshold = rng::bernoulli_threshold(p);
  std::uint64_t cell = 0;
  for (int u = 0; u < u_size; ++u) {
    std::uint64_t* row = out.rows.data() + static_cast<std::size_t>(u) * out.words_per_row;
    for (int v = 0; v < v_size; ++v, ++cell) {
      if (stream.word(cell) < threshold) {
        row[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
      }
    }
  }
  return out;
}

namespace {

// Column bitsets over U, one per V vertex.
std::vector<std::uint64_t> transpose_columns(const BipartiteAdjacency& a) {
  const std::size_t col_words = (static_cast<std::size_t>(a.u_size) + 63) / 64;
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(a.v_size) * col_words, 0);
  for (int u = 0; u < a.u_size; ++u) {
    for (int v = 0; v < a.v_size; ++v) {
      if (a.bit(u, v)) {
        cols[static_cast<std::size_t>(v) * col_words + (static_cast<std::size_t>(u) >> 6)] |=
            1ull << (u & 63);
      }
    }
  }
  return cols;
}

std::int64_t column_codegree(const std::vector<std::uint64_t>& cols, std::size_t col_words, int v,
                             int w) {
  const std::uint64_t* cv = cols.data() + static_cast<std::size_t>(v) * col_words;
  const std::uint64_t* cw = cols.data() + static_cast<std::size_t>(w) * col_words;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < col_words; ++i) acc += std::popcount(cv[i] & cw[i]);
  return acc;
}

}  // namespace

std::vector<int> h_vector(const BipartiteAdjacency& a, const BipartiteAdjacency& a_prime) {
  if (a.u_size != a_prime.u_size || a.v_size != a_prime.v_size) {
    throw_param("h-vector inputs must have matching dimensions");
  }
  const std::size_t col_words = (static_cast<std::size_t>(a.u_size) + 63) / 64;
  const auto cols_a = transpose_columns(a);
  const auto cols_b = transpose_columns(a_prime);

  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(a.v_size) * (a.v_size - 1) / 2);
  for (int v = 0; v < a.v_size; ++v) {
    for (int w = v + 1; w < a.v_size; ++w) {
      h.push_back(static_cast<int>(column_codegree(cols_a, col_words, v, w) -
                                   column_codegree(cols_b, col_words, v, w)));
    }
  }
  return h;
}

ProbeReport run_h_experiments(int n, double p, int u_size, std::uint64_t seed,
                              std::uint64_t trials, int threads, bool collect_coordinates) {
  if (!(p > 0.0 && p < 1.0)) throw_param("edge probability must lie in (0,1)");
  if (u_size < 1 || u_size > n - 2) throw_param("side size must satisfy 1 <= u_size <= n-2");
  if (trials == 0) throw_param("trial budget must be positive");

  const int v_size = n - u_size;
  const std::size_t coords = static_cast<std::size_t>(v_size) * (v_size - 1) / 2;
  const double band_lo = std::pow(static_cast<double>(u_size), 0.49);
  const double band_hi = std::pow(static_cast<double>(u_size), 0.51);
  const double lambda_threshold = static_cast<double>(v_size) * v_size / 4.0;
  const double good_pair_threshold = n * p * (1.0 - p) / 2.0;

  struct Shard {
    std::int64_t h_sum = 0;
    std::uint64_t h_sq_sum = 0;
    std::uint64_t in_band = 0;
    std::uint64_t lambda_trials = 0;
    std::uint64_t good_pairs = 0;
    std::vector<std::int64_t> coord_sums;
    std::vector<std::uint64_t> coord_sq_sums;
    bool used = false;
  };

  auto states = run_sharded<Shard>(trials, threads, [&](Shard& shard, std::uint64_t begin,
                                                        std::uint64_t end) {
    shard.used = true;
    if (collect_coordinates) {
      shard.coord_sums.assign(coords, 0);
      shard.coord_sq_sums.assign(coords, 0);
    }
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      const BipartiteAdjacency a = sample_bipartite(u_size, v_size, p, seed, trial, false);
      const BipartiteAdjacency b = sample_bipartite(u_size, v_size, p, seed, trial, true);
      const std::vector<int> h = h_vector(a, b);

      std::uint64_t out_of_band = 0;
      for (std::size_t e = 0; e < h.size(); ++e) {
        const int he = h[e];
        const double mag = std::abs(static_cast<double>(he));
        shard.h_sum += he;
        shard.h_sq_sum += static_cast<std::uint64_t>(static_cast<std::int64_t>(he) * he);
        if (mag > band_lo && mag < band_hi) {
          ++shard.in_band;
        } else {
          ++out_of_band;
        }
        if (collect_coordinates) {
          shard.coord_sums[e] += he;
          shard.coord_sq_sums[e] += static_cast<std::uint64_t>(static_cast<std::int64_t>(he) * he);
        }
      }
      if (static_cast<double>(out_of_band) > lambda_threshold) ++shard.lambda_trials;

      if (u_size == 1) {
        // J and J' are the two sampled neighborhoods of the single vertex
        std::int64_t sym_diff = 0;
        for (std::size_t w = 0; w < a.rows.size(); ++w) {
          sym_diff += std::popcount(a.rows[w] ^ b.rows[w]);
        }
        if (static_cast<double>(sym_diff) >= good_pair_threshold) ++shard.good_pairs;
      }
    }
  });

  ProbeReport report;
  report.experiment = "hvector";
  report.n = n;
  report.p = p;
  report.seed = seed;
  report.trials = trials;
  report.u_size = u_size;
  report.band_lo = band_lo;
  report.band_hi = band_hi;

  std::int64_t h_sum = 0;
  std::uint64_t h_sq_sum = 0, in_band = 0, lambda_trials = 0, good_pairs = 0;
  std::vector<std::int64_t> coord_sums(collect_coordinates ? coords : 0, 0);
  std::vector<std::uint64_t> coord_sq_sums(collect_coordinates ? coords : 0, 0);
  for (const Shard& shard : states) {
    if (!shard.used) continue;
    h_sum += shard.h_sum;
    h_sq_sum += shard.h_sq_sum;
    in_band += shard.in_band;
    lambda_trials += shard.lambda_trials;
    good_pairs += shard.good_pairs;
    if (collect_coordinates) {
      for (std::size_t e = 0; e < coords; ++e) {
        coord_sums[e] += shard.coord_sums[e];
        coord_sq_sums[e] += shard.coord_sq_sums[e];
      }
    }
  }

  const double total_coords = static_cast<double>(trials) * static_cast<double>(coords);
  report.h_coord_mean = static_cast<double>(h_sum) / total_coords;
  report.h_coord_variance = static_cast<double>(h_sq_sum) / total_coords -
                            report.h_coord_mean * report.h_coord_mean;
  report.h_band_fraction = static_cast<double>(in_band) / total_coords;
  report.lambda_e_freq = 1.0 - report.h_band_fraction;
  report.lambda_global_freq = static_cast<double>(lambda_trials) / static_cast<double>(trials);
  report.good_pair_freq =
      u_size == 1 ? static_cast<double>(good_pairs) / static_cast<double>(trials) : 0.0;
  if (collect_coordinates) {
    const double t = static_cast<double>(trials);
    for (std::size_t e = 0; e < coords; ++e) {
      const double mean = static_cast<double>(coord_sums[e]) / t;
      report.h_coord_means.push_back(mean);
      report.h_coord_vars.push_back(static_cast<double>(coord_sq_sums[e]) / t - mean * mean);
    }
  }
  return report;
}

namespace {

std::int64_t masked_codegree_above(const BitAdjacency& adj, int i, int j,
                                   const std::vector<std::uint64_t>& mask, int above) {
  const std::size_t wpr = adj.words_per_row();
  const std::uint64_t* ri = adj.data() + static_cast<std::size_t>(i) * wpr;
  const std::uint64_t* rj = adj.data() + static_cast<std::size_t>(j) * wpr;
  std::int64_t acc = 0;
  for (std::size_t w = static_cast<std::size_t>(above) >> 6; w < wpr; ++w) {
    std::uint64_t word = ri[w] & rj[w] & mask[w];
    if (w == (static_cast<std::size_t>(above) >> 6)) word &= ~((2ull << (above & 63)) - 1);
    acc += std::popcount(word);
  }
  return acc;
}

}  // namespace

BipartiteSplit bipartite_decomposition_check(const BitAdjacency& adj, int u_size) {
  const int n = adj.n();
  if (u_size < 1 || u_size > n) throw_param("side size must satisfy 1 <= u_size <= n");

  const std::size_t wpr = adj.words_per_row();
  std::vector<std::uint64_t> u_mask(wpr, 0), v_mask(wpr, 0);
  for (int i = 0; i < n; ++i) {
    auto& mask = i < u_size ? u_mask : v_mask;
    mask[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
  }

  BipartiteSplit split;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj.edge(i, j)) continue;
      const bool i_in_u = i < u_size;
      const bool j_in_u = j < u_size;
      if (i_in_u && j_in_u) {
        split.s_u += masked_codegree_above(adj, i, j, u_mask, j);
        split.cross2u += masked_codegree_above(adj, i, j, v_mask, u_size - 1);
      } else if (!i_in_u && !j_in_u) {
        split.q_v += masked_codegree_above(adj, i, j, v_mask, j);
        // triangles with the third vertex in U are counted from the U edge
        // or the U vertex, never from here
      } else {
        // i in U, j in V: count V-apexes above j to hit each triangle once
        split.cross2v += masked_codegree_above(adj, i, j, v_mask, j);
      }
    }
  }
  split.total = count_triangles(adj);
  if (split.s_u + split.cross2u + split.cross2v + split.q_v != split.total) {
    throw std::logic_error("bipartite triangle decomposition identity violated");
  }
  return split;
}

}  // namespace trillt
