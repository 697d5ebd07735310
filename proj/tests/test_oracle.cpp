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

#include <cmath>
#include <complex>

#include "core/moments.hpp"
#include "core/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace trillt;

TEST_CASE("single-triangle case") {
  for (double p : {0.2, 0.5, 0.77}) {
    const PmfTable pmf = exact_pmf(3, p);
    REQUIRE(pmf.support.size() == 2);
    CHECK(pmf.support[0] == 0);
    CHECK(pmf.support[1] == 1);
    CHECK(pmf.probs[1] == doctest::Approx(p * p * p).epsilon(1e-14));
    CHECK(pmf.probs[0] == doctest::Approx(1 - p * p * p).epsilon(1e-14));
    const PmfStatistics stats = pmf_statistics(pmf);
    CHECK(stats.mean == doctest::Approx(p * p * p).epsilon(1e-14));
  }
}

TEST_CASE("probabilities sum to one") {
  for (int n = 2; n <= 7; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      const PmfTable pmf = exact_pmf(n, p);
      NeumaierSum total;
      for (double q : pmf.probs) total.add(q);
      CAPTURE(n);
      CHECK(std::abs(total.value() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("table moments match the independent per-mask enumeration") {
  for (int n = 4; n <= 6; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      const PmfTable pmf = exact_pmf(n, p);
      const PmfStatistics stats = pmf_statistics(pmf);
      const testing::EnumeratedStats direct = testing::enumerate_triangle_stats(n, p);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(stats.mean == doctest::Approx(direct.mean).epsilon(1e-12));
      CHECK(stats.variance == doctest::Approx(direct.variance).epsilon(1e-12));
    }
  }
}

TEST_CASE("table moments match the closed forms through n = 7") {
  for (int n = 4; n <= 7; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      const PmfTable pmf = exact_pmf(n, p);
      const PmfStatistics stats = pmf_statistics(pmf);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(std::abs(stats.mean - mean_triangles(n, p)) <=
            1e-10 * std::max(1.0, mean_triangles(n, p)));
      CHECK(std::abs(stats.variance - variance_triangles(n, p)) <=
            1e-10 * variance_triangles(n, p));
    }
  }
}

TEST_CASE("n=4 fixed values") {
  const PmfTable pmf = exact_pmf(4, 0.5);
  const PmfStatistics stats = pmf_statistics(pmf);
  CHECK(stats.mean == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(stats.variance == doctest::Approx(0.625).epsilon(1e-14));
  // S = 3 is impossible on four vertices
  CHECK(pmf.prob_at(3) == 0.0);
  CHECK(pmf.prob_at(4) == doctest::Approx(std::pow(0.5, 6)).epsilon(1e-14));
}

TEST_CASE("cost guard") {
  CHECK_THROWS_AS(exact_pmf(8, 0.5), Error);
  CHECK_THROWS_AS(exact_pmf(9, 0.5, true), Error);
  CHECK_THROWS_AS(exact_pmf(3, 1.5), Error);
}

TEST_CASE("residue marginals") {
  const PmfTable pmf = exact_pmf(6, 0.5);
  const PmfStatistics stats = pmf_statistics(pmf, 3);
  REQUIRE(stats.mod_q.size() == 3);
  NeumaierSum total;
  for (double f : stats.mod_q) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    total.add(f);
  }
  CHECK(std::abs(total.value() - 1.0) < 1e-12);
  CHECK_THROWS_AS(pmf_statistics(pmf, 1), Error);
}

TEST_CASE("point masses behave") {
  PmfTable point;
  point.n = 10;
  point.p = 0.5;
  point.kind = PmfKind::exact;
  point.support = {5};
  point.probs = {1.0};
  const PmfStatistics stats = pmf_statistics(point);
  CHECK(stats.mean == 5.0);
  CHECK(stats.variance == 0.0);

  // centered point mass has unit characteristic function
  const LatticeSpec lattice{5.0, 2.0};
  for (double t : {0.0, 0.5, 3.0, 10.0}) {
    const auto value = exact_charfun(point, lattice, t);
    CHECK(value.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(value.imag() == doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("characteristic function basics") {
  const PmfTable pmf = exact_pmf(5, 0.5);
  const LatticeSpec lattice = LatticeSpec::for_graph(5, 0.5);

  const auto at_zero = exact_charfun(pmf, lattice, 0.0);
  CHECK(at_zero.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at_zero.imag() == doctest::Approx(0.0).epsilon(1e-14));

  for (int i = 0; i < 1000; ++i) {
    const double t = -40.0 + 0.08 * i;
    CHECK(std::abs(exact_charfun(pmf, lattice, t)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("complement symmetry of the enumeration") {
  // complementing every mask swaps p and 1-p; the means must line up with
  // the closed form on both sides
  const double p = 0.3;
  const PmfTable direct = exact_pmf(5, p);
  const PmfTable flipped = exact_pmf(5, 1 - p);
  const double sum = pmf_statistics(direct).mean + pmf_statistics(flipped).mean;
  const double expected = (std::pow(p, 3) + std::pow(1 - p, 3)) * binomial_coeff3(5);
  CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("enumeration histogram equals direct per-mask recount") {
  // same table, two entirely different mechanisms: Gray-code increments vs
  // per-mask triple-loop recount feeding a direct histogram
  const int n = 5;
  const double p = 0.35;
  const PmfTable fast = exact_pmf(n, p);

  const int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  std::vector<long double> probs(11, 0.0L);
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
    probs[static_cast<std::size_t>(testing::triple_loop_triangles(adj))] +=
        std::pow(static_cast<long double>(p), bits) *
        std::pow(static_cast<long double>(1 - p), m - bits);
  }
  for (std::size_t k = 0; k < probs.size(); ++k) {
    CHECK(fast.prob_at(static_cast<std::int64_t>(k)) ==
          doctest::Approx(static_cast<double>(probs[k])).epsilon(1e-12));
  }
}
