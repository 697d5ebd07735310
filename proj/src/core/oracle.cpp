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

#include "core/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "core/moments.hpp"

namespace trillt {

void PmfTable::validate() const {
  if (support.size() != probs.size()) throw_param("pmf support/probs size mismatch");
  if (support.empty()) throw_param("pmf table is empty");
  if (!std::is_sorted(support.begin(), support.end())) throw_param("pmf support must be sorted");
  NeumaierSum total;
  for (double q : probs) {
    if (q < 0.0) throw_param("pmf probabilities must be nonnegative");
    total.add(q);
  }
  if (std::abs(total.value() - 1.0) > 1e-12) throw_param("pmf probabilities must sum to 1");
  const double max_count = binomial_coeff3(n);
  if (support.front() < 0 || static_cast<double>(support.back()) > max_count) {
    throw_param("pmf support outside [0, C(n,3)]");
  }
}

double PmfTable::prob_at(std::int64_t k) const noexcept {
  const auto it = std::lower_bound(support.begin(), support.end(), k);
  if (it == support.end() || *it != k) return 0.0;
  return probs[static_cast<std::size_t>(it - support.begin())];
}

PmfTable exact_pmf(int n, double p, bool force) {
  if (n < 1) throw_param("vertex count must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw_param("edge probability must lie in (0,1)");
  if (n > 8) throw_param("exact enumeration is capped at n = 8 (2^28 graphs)");
  if (n > 7 && !force) {
    throw_param("exact enumeration beyond n = 7 must be forced (cost guard)");
  }

  const int m = n * (n - 1) / 2;
  const int max_triangles = n * (n - 1) * (n - 2) / 6;

  // edge bit -> endpoints, lexicographic over (i, j), i < j
  std::array<std::uint8_t, 28> eu{}, ev{};
  {
    int b = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++b) {
        eu[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(i);
        ev[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(j);
      }
    }
  }

  // hist[t][e] = number of graphs with t triangles and e edges
  std::vector<std::vector<std::uint64_t>> hist(
      static_cast<std::size_t>(max_triangles) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));

  std::array<std::uint32_t, 8> adj{};
  int triangles = 0;
  int edges = 0;
  hist[0][0]++;  // empty graph

  const std::uint64_t total = 1ull << m;
  for (std::uint64_t g = 1; g < total; ++g) {
    // Gray transition: flipping bit ctz(g) moves gray(g-1) to gray(g).
    const int b = std::countr_zero(g);
    const int u = eu[static_cast<std::size_t>(b)];
    const int v = ev[static_cast<std::size_t>(b)];
    const int delta = std::popcount(adj[static_cast<std::size_t>(u)] &
                                    adj[static_cast<std::size_t>(v)]);
    const std::uint32_t u_bit = 1u << u;
    const std::uint32_t v_bit = 1u << v;
    if (adj[static_cast<std::size_t>(u)] & v_bit) {
      adj[static_cast<std::size_t>(u)] &= ~v_bit;
      adj[static_cast<std::size_t>(v)] &= ~u_bit;
      triangles -= delta;
      --edges;
    } else {
      adj[static_cast<std::size_t>(u)] |= v_bit;
      adj[static_cast<std::size_t>(v)] |= u_bit;
      triangles += delta;
      ++edges;
    }
    hist[static_cast<std::size_t>(triangles)][static_cast<std::size_t>(edges)]++;
  }

  // weight buckets: prob(t) = sum_e hist[t][e] p^e (1-p)^(m-e)
  std::vector<long double> weight(static_cast<std::size_t>(m) + 1);
  for (int e = 0; e <= m; ++e) {
    weight[static_cast<std::size_t>(e)] =
        std::pow(static_cast<long double>(p), e) *
        std::pow(static_cast<long double>(1.0 - p), m - e);
  }

  PmfTable pmf;
  pmf.n = n;
  pmf.p = p;
  pmf.kind = PmfKind::exact;
  pmf.sample_count = 0;
  for (int t = 0; t <= max_triangles; ++t) {
    const auto& row = hist[static_cast<std::size_t>(t)];
    bool any = false;
    long double acc = 0.0L;
    for (int e = 0; e <= m; ++e) {
      if (row[static_cast<std::size_t>(e)] != 0) {
        any = true;
        acc += static_cast<long double>(row[static_cast<std::size_t>(e)]) *
               weight[static_cast<std::size_t>(e)];
      }
    }
    if (any) {
      pmf.support.push_back(t);
      pmf.probs.push_back(static_cast<double>(acc));
    }
  }
  pmf.validate();
  return pmf;
}

PmfStatistics pmf_statistics(const PmfTable& pmf, int q) {
  pmf.validate();
  if (q == 1 || q < 0) throw_param("residue modulus must be at least 2");

  PmfStatistics stats;
  NeumaierSum mean;
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    mean.add(static_cast<double>(pmf.support[i]) * pmf.probs[i]);
  }
  stats.mean = mean.value();

  NeumaierSum var;
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    const double d = static_cast<double>(pmf.support[i]) - stats.mean;
    var.add(d * d * pmf.probs[i]);
  }
  stats.variance = var.value();

  if (q >= 2) {
    std::vector<NeumaierSum> marg(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < pmf.support.size(); ++i) {
      marg[static_cast<std::size_t>(pmf.support[i] % q)].add(pmf.probs[i]);
    }
    for (const auto& s : marg) stats.mod_q.push_back(s.value());
  }
  return stats;
}

std::complex<double> exact_charfun(const PmfTable& pmf, const LatticeSpec& lattice, double t) {
  if (!(lattice.scale > 0.0)) throw_param("lattice scale must be positive");
  NeumaierSum re, im;
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    const double x = lattice.point(pmf.support[i]);
    re.add(pmf.probs[i] * std::cos(t * x));
    im.add(pmf.probs[i] * std::sin(t * x));
  }
  return {re.value(), im.value()};
}

}  // namespace trillt
