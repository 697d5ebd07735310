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

#include "core/limitlaw.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

#include "core/moments.hpp"
#include "core/parallel.hpp"
#include "core/triangles.hpp"

namespace trillt {

namespace {

const double kGaussNorm = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double standard_normal_density(double x) { return kGaussNorm * std::exp(-0.5 * x * x); }

}  // namespace

PmfTable empirical_pmf(const GraphParams& params, std::uint64_t samples, int threads) {
  params.validate();
  if (samples == 0) throw_param("empirical pmf needs at least one sample");

  using ShardHist = std::unordered_map<std::int64_t, std::uint64_t>;
  auto states = run_sharded<ShardHist>(
      samples, threads, [&](ShardHist& hist, std::uint64_t begin, std::uint64_t end) {
        BitAdjacency scratch;
        GraphParams gp = params;
        for (std::uint64_t i = begin; i < end; ++i) {
          gp.sample_index = params.sample_index + i;
          sample_gnp_into(gp, scratch);
          ++hist[count_triangles(scratch)];
        }
      });

  std::map<std::int64_t, std::uint64_t> total;
  for (const ShardHist& hist : states) {
    for (const auto& [k, c] : hist) total[k] += c;
  }

  PmfTable pmf;
  pmf.n = params.n;
  pmf.p = params.p;
  pmf.kind = PmfKind::empirical;
  pmf.sample_count = samples;
  const double m = static_cast<double>(samples);
  for (const auto& [k, c] : total) {
    pmf.support.push_back(k);
    pmf.counts.push_back(c);
    pmf.probs.push_back(static_cast<double>(c) / m);
  }
  return pmf;
}

double discrete_gaussian_reference(std::int64_t k, int n, double p) {
  if (n < 4) throw_param("discrete Gaussian reference needs n >= 4");
  const double mu = mean_triangles(n, p);
  const double sigma = std::sqrt(variance_triangles(n, p));
  const double x = (static_cast<double>(k) - mu) / sigma;
  return standard_normal_density(x) / sigma;
}

std::uint64_t minimum_llt_samples(int n, double p) {
  // underpowered when sqrt(sigma N(0) / m) > N(0)/2, i.e. m < 4 sigma / N(0)
  const double sigma = std::sqrt(variance_triangles(n, p));
  return static_cast<std::uint64_t>(std::ceil(4.0 * sigma / kGaussNorm)) + 1;
}

DiscrepancyReport sup_discrepancy(const PmfTable& pmf, int n, double p) {
  pmf.validate();
  if (pmf.n != n || pmf.p != p) throw_param("pmf parameters do not match the requested (n,p)");
  if (n < 4) throw_param("sup discrepancy needs n >= 4");

  const double mu = mean_triangles(n, p);
  const double sigma = std::sqrt(variance_triangles(n, p));
  const std::int64_t max_k =
      static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6;
  const std::int64_t margin = static_cast<std::int64_t>(std::ceil(4.0 * sigma));
  const std::int64_t lo = std::max<std::int64_t>(0, pmf.support.front() - margin);
  const std::int64_t hi = std::min<std::int64_t>(max_k, pmf.support.back() + margin);

  DiscrepancyReport report;
  report.n = n;
  report.p = p;
  report.kind = pmf.kind;
  report.sample_count = pmf.sample_count;
  report.per_point.reserve(static_cast<std::size_t>(hi - lo + 1));

  const double m = static_cast<double>(pmf.sample_count);
  std::size_t cursor = 0;  // walks the sorted support once
  for (std::int64_t k = lo; k <= hi; ++k) {
    while (cursor < pmf.support.size() && pmf.support[cursor] < k) ++cursor;
    const double ph =
        (cursor < pmf.support.size() && pmf.support[cursor] == k) ? pmf.probs[cursor] : 0.0;

    DiscrepancyPoint pt;
    pt.k = k;
    pt.x = (static_cast<double>(k) - mu) / sigma;
    pt.scaled_empirical = sigma * ph;
    pt.gaussian = standard_normal_density(pt.x);
    pt.gap = std::abs(pt.scaled_empirical - pt.gaussian);
    report.per_point.push_back(pt);

    if (pt.gap > report.sup_discrepancy) {
      report.sup_discrepancy = pt.gap;
      report.argmax_k = k;
      report.argmax_x = pt.x;
    }
    if (pmf.kind == PmfKind::empirical) {
      const double err = sigma * std::sqrt(std::max(0.0, ph * (1.0 - ph)) / m);
      report.mc_error_bound = std::max(report.mc_error_bound, err);
    }
  }

  if (pmf.kind == PmfKind::empirical && report.mc_error_bound > standard_normal_density(0.0) / 2.0) {
    throw_underpowered("Monte Carlo error bound exceeds N(0)/2; increase the sample count");
  }
  return report;
}

ModQResult mod_q_histogram(const GraphParams& params, std::uint64_t samples, int q, int threads) {
  params.validate();
  if (q < 2) throw_param("residue modulus must be at least 2");
  if (samples == 0) throw_param("residue histogram needs at least one sample");

  using ShardCounts = std::vector<std::uint64_t>;
  auto states = run_sharded<ShardCounts>(
      samples, threads, [&](ShardCounts& counts, std::uint64_t begin, std::uint64_t end) {
        counts.assign(static_cast<std::size_t>(q), 0);
        BitAdjacency scratch;
        GraphParams gp = params;
        for (std::uint64_t i = begin; i < end; ++i) {
          gp.sample_index = params.sample_index + i;
          sample_gnp_into(gp, scratch);
          ++counts[static_cast<std::size_t>(count_triangles(scratch) % q)];
        }
      });

  std::vector<std::uint64_t> total(static_cast<std::size_t>(q), 0);
  for (const ShardCounts& counts : states) {
    if (counts.empty()) continue;
    for (int a = 0; a < q; ++a) total[static_cast<std::size_t>(a)] += counts[static_cast<std::size_t>(a)];
  }

  ModQResult out;
  out.q = q;
  out.sample_count = samples;
  const double uniform = 1.0 / q;
  for (int a = 0; a < q; ++a) {
    const double f = static_cast<double>(total[static_cast<std::size_t>(a)]) /
                     static_cast<double>(samples);
    out.freqs.push_back(f);
    out.max_dev = std::max(out.max_dev, std::abs(f - uniform));
  }
  return out;
}

ModQResult mod_q_from_pmf(const PmfTable& pmf, int q) {
  if (q < 2) throw_param("residue modulus must be at least 2");
  const PmfStatistics stats = pmf_statistics(pmf, q);
  ModQResult out;
  out.q = q;
  out.sample_count = pmf.sample_count;
  out.freqs = stats.mod_q;
  const double uniform = 1.0 / q;
  for (double f : out.freqs) out.max_dev = std::max(out.max_dev, std::abs(f - uniform));
  return out;
}

}  // namespace trillt
