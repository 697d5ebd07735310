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

#include <algorithm>
#include <cmath>
#include <set>

#include "core/probe.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace trillt;

TEST_CASE("matching plan construction") {
  // n=4, k=2: the two shifts give {{0,2},{1,3}} and {{0,3},{1,2}}
  const MatchingPlan plan = build_matching_plan(4, 2);
  REQUIRE(plan.matchings.size() == 2);
  CHECK(plan.matchings[0][0].u == 0);
  CHECK(plan.matchings[0][0].v == 2);
  CHECK(plan.matchings[0][1].u == 1);
  CHECK(plan.matchings[0][1].v == 3);
  CHECK(plan.matchings[1][0].u == 0);
  CHECK(plan.matchings[1][0].v == 3);
  CHECK(plan.matchings[1][1].u == 1);
  CHECK(plan.matchings[1][1].v == 2);

  // n=8, k=3: twelve union edges, all between the two sides, disjoint
  const MatchingPlan plan2 = build_matching_plan(8, 3);
  CHECK(plan2.union_edges.size() == 12);
  CHECK(plan2.e_mask.edge_count() == 12);
  std::set<std::pair<int, int>> seen;
  for (const auto& matching : plan2.matchings) {
    CHECK(matching.size() == 4);
    for (const Edge& e : matching) {
      CHECK(e.u < 4);
      CHECK(e.v >= 4);
      CHECK(seen.insert({e.u, e.v}).second);  // pairwise disjoint
    }
  }

}

TEST_CASE("matching plan guards") {
  CHECK_THROWS_AS(build_matching_plan(7, 1), Error);
  CHECK_THROWS_AS(build_matching_plan(8, 0), Error);
  CHECK_THROWS_AS(build_matching_plan(8, 5), Error);
  CHECK_THROWS_AS(build_matching_plan(2, 1), Error);
  CHECK_NOTHROW(build_matching_plan(8, 4));
  CHECK_NOTHROW(build_matching_plan(60, 15));
}

TEST_CASE("no triangle has three matching-union edges") {
  std::mt19937_64 gen(606);
  for (int rep = 0; rep < 1000; ++rep) {
    const int half = 2 + static_cast<int>(gen() % 10);
    const int n = 2 * half;
    const int k = 1 + static_cast<int>(gen() % (n / 2));
    const MatchingPlan plan = build_matching_plan(n, k);
    const BitAdjacency adj = testing::random_graph(gen, n, 0.5);
    const PartitionedCounts counts = testing::triple_loop_partitioned(adj, plan.e_mask);
    CAPTURE(n);
    CAPTURE(k);
    REQUIRE(counts.c3 == 0);
  }
}

TEST_CASE("decomposition trials with a single matching") {
  // two matching edges never share a vertex, so Z = 0 identically
  const MatchingPlan plan = build_matching_plan(12, 1);
  const GraphParams params{12, 0.5, 4, 0};
  const ProbeReport report = run_decomposition_trials(params, plan, 300);
  CHECK(report.totals.c2 == 0);
  CHECK(report.totals.c3 == 0);
  CHECK(report.z_mean == 0.0);
  CHECK(report.z_var == 0.0);
  CHECK(report.z_var_bound == doctest::Approx(6.0 * 12.0));
  CHECK(report.totals.c0 + report.totals.c1 > 0);
}

TEST_CASE("decomposition aggregates are deterministic across threads") {
  const MatchingPlan plan = build_matching_plan(20, 4);
  const GraphParams params{20, 0.5, 77, 0};
  const ProbeReport a = run_decomposition_trials(params, plan, 2000, 1);
  const ProbeReport b = run_decomposition_trials(params, plan, 2000, 3);
  CHECK(a.totals.c0 == b.totals.c0);
  CHECK(a.totals.c1 == b.totals.c1);
  CHECK(a.totals.c2 == b.totals.c2);
  CHECK(a.z_var == b.z_var);
  CHECK(a.y_e_means == b.y_e_means);
  CHECK(a.bad_L_freq == b.bad_L_freq);
}

TEST_CASE("wedge counts through F follow the predicted binomial mean") {
  // Y_e ~ Bin(m_e, p^2) with m_e = n - 2 - 2(k-1) wedges avoiding the union
  const int n = 24;
  const int k = 3;
  const double p = 0.4;
  const MatchingPlan plan = build_matching_plan(n, k);
  const GraphParams params{n, p, 11, 0};
  const std::uint64_t trials = 4000;
  const ProbeReport report = run_decomposition_trials(params, plan, trials);

  const double expected_paths = n - 2 - 2 * (k - 1);
  const double mean = expected_paths * p * p;
  const double se = std::sqrt(expected_paths * p * p * (1 - p * p) / static_cast<double>(trials));
  REQUIRE(report.y_e_means.size() == plan.union_edges.size());
  for (std::size_t e = 0; e < report.y_e_means.size(); ++e) {
    CAPTURE(e);
    CHECK(report.y_e_path_counts[e] == static_cast<std::int64_t>(expected_paths));
    REQUIRE(std::abs(report.y_e_means[e] - mean) < 3.5 * se);
  }
}

TEST_CASE("h-vector of identical copies vanishes") {
  const BipartiteAdjacency a = sample_bipartite(6, 9, 0.5, 42, 0, false);
  const std::vector<int> h = h_vector(a, a);
  CHECK(h.size() == 36);
  CHECK(std::all_of(h.begin(), h.end(), [](int v) { return v == 0; }));
}

TEST_CASE("h-vector with a single exposed vertex stays in -1..1") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const BipartiteAdjacency a = sample_bipartite(1, 20, 0.5, 9, trial, false);
    const BipartiteAdjacency b = sample_bipartite(1, 20, 0.5, 9, trial, true);
    for (int v : h_vector(a, b)) {
      REQUIRE(v >= -1);
      REQUIRE(v <= 1);
    }
  }
}

TEST_CASE("h-vector dimension mismatch is rejected") {
  const BipartiteAdjacency a = sample_bipartite(3, 5, 0.5, 1, 0, false);
  const BipartiteAdjacency b = sample_bipartite(3, 6, 0.5, 1, 0, true);
  CHECK_THROWS_AS(h_vector(a, b), Error);
}

TEST_CASE("h-vector coordinate variance matches the binomial difference") {
  // each coordinate is a difference of two Bin(|U|, p^2) draws
  const int u_size = 30;
  const double p = 0.5;
  const ProbeReport report = run_h_experiments(64, p, u_size, 13, 400);
  const double expected = 2.0 * u_size * p * p * (1 - p * p);
  CHECK(std::abs(report.h_coord_variance - expected) / expected < 0.05);
  // coordinates within a trial share rows, so the averaged mean fluctuates
  // on the scale of the per-trial row-degree totals, not of independent
  // coordinate draws; 0.15 is ~4.5 sigma for 400 trials at this size
  CHECK(std::abs(report.h_coord_mean) < 0.15);
}

TEST_CASE("h-vector coordinate distribution is symmetric about zero") {
  // same correlated-coordinates caveat as above: per trial, the coordinate
  // sum collapses to sum_u C(deg,2) differences, sd ~ 136 at this size
  const std::uint64_t trials = 500;
  const ProbeReport report = run_h_experiments(40, 0.5, 20, 99, trials);
  const double coords = 20.0 * 19.0 / 2.0;
  const double per_trial_sd = 136.0;
  const double mean_sd = per_trial_sd / (coords * std::sqrt(static_cast<double>(trials)));
  CHECK(std::abs(report.h_coord_mean) < 4.5 * mean_sd);
}

TEST_CASE("good-pair frequency for a single exposed vertex") {
  const ProbeReport report = run_h_experiments(100, 0.5, 1, 31, 2000);
  CHECK(report.good_pair_freq >= 0.999);
}

TEST_CASE("band statistics are internally consistent") {
  const ProbeReport report = run_h_experiments(40, 0.5, 20, 7, 200);
  CHECK(report.h_band_fraction >= 0.0);
  CHECK(report.h_band_fraction <= 1.0);
  CHECK(report.lambda_e_freq == doctest::Approx(1.0 - report.h_band_fraction));
  CHECK(report.lambda_global_freq >= 0.0);
  CHECK(report.lambda_global_freq <= 1.0);
  CHECK(report.band_lo == doctest::Approx(std::pow(20.0, 0.49)));
  CHECK(report.band_hi == doctest::Approx(std::pow(20.0, 0.51)));
  // when most coordinates sit out of band, the global event must fire
  if (report.lambda_e_freq > 0.75) CHECK(report.lambda_global_freq == 1.0);
}

TEST_CASE("h experiment guards") {
  CHECK_THROWS_AS(run_h_experiments(10, 0.5, 0, 1, 10), Error);
  CHECK_THROWS_AS(run_h_experiments(10, 0.5, 9, 1, 10), Error);
  CHECK_THROWS_AS(run_h_experiments(10, 0.5, 3, 1, 0), Error);
  CHECK_NOTHROW(run_h_experiments(10, 0.5, 8, 1, 10));
}

TEST_CASE("bipartite split on trivial cuts") {
  std::mt19937_64 gen(111);
  const BitAdjacency adj = testing::random_graph(gen, 14, 0.5);
  const std::int64_t s = count_triangles(adj);

  const BipartiteSplit all_u = bipartite_decomposition_check(adj, 14);
  CHECK(all_u.s_u == s);
  CHECK(all_u.cross2u == 0);
  CHECK(all_u.cross2v == 0);
  CHECK(all_u.q_v == 0);

  const BipartiteSplit one = bipartite_decomposition_check(adj, 1);
  CHECK(one.s_u == 0);
  CHECK(one.cross2u == 0);
  CHECK(one.s_u + one.cross2u + one.cross2v + one.q_v == s);

  CHECK_THROWS_AS(bipartite_decomposition_check(adj, 0), Error);
  CHECK_THROWS_AS(bipartite_decomposition_check(adj, 15), Error);
}

TEST_CASE("bipartite split identity over fuzz cases") {
  std::mt19937_64 gen(2718);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 4 + static_cast<int>(gen() % 37);
    const int u_size = 1 + static_cast<int>(gen() % n);
    const BitAdjacency adj = testing::random_graph(gen, n, 0.45);
    const BipartiteSplit split = bipartite_decomposition_check(adj, u_size);
    CAPTURE(n);
    CAPTURE(u_size);
    REQUIRE(split.s_u + split.cross2u + split.cross2v + split.q_v == split.total);
    REQUIRE(split.total == testing::triple_loop_triangles(adj));
  }
}

TEST_CASE("decomposition identity holds inside the trial runner") {
  // the runner asserts c0+c1+c2 = S and c3 = 0 on every trial
  const MatchingPlan plan = build_matching_plan(30, 7);
  const GraphParams params{30, 0.6, 5, 0};
  CHECK_NOTHROW(run_decomposition_trials(params, plan, 500));
}

TEST_CASE("bipartite samplers give independent copies") {
  const BipartiteAdjacency a = sample_bipartite(8, 8, 0.5, 3, 12, false);
  const BipartiteAdjacency b = sample_bipartite(8, 8, 0.5, 3, 12, true);
  CHECK(a.rows != b.rows);
  // deterministic rerun
  const BipartiteAdjacency a2 = sample_bipartite(8, 8, 0.5, 3, 12, false);
  CHECK(a.rows == a2.rows);
}
