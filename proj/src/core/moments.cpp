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

#include "core/moments.hpp"

#include <cmath>

#include "core/parallel.hpp"
#include "core/triangles.hpp"

namespace trillt {

namespace {

void validate_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw_param("edge probability must lie in (0,1)");
}

}  // namespace

double binomial_coeff3(int n) {
  if (n < 3) return 0.0;
  return static_cast<double>(n) * (n - 1.0) * (n - 2.0) / 6.0;
}

double mean_triangles(int n, double p) {
  validate_probability(p);
  if (n < 3) return 0.0;
  return p * p * p * binomial_coeff3(n);
}

double variance_triangles(int n, double p) {
  validate_probability(p);
  if (n < 3) throw_param("triangle variance needs n >= 3");
  const double p3 = p * p * p;
  const long double shared_pairs =  // ordered pairs of triangles sharing one edge
      static_cast<long double>(n) * (n - 1.0L) * (n - 2.0L) * (n - 3.0L) / 2.0L;
  return binomial_coeff3(n) * p3 * (1.0 - p3) +
         static_cast<double>(shared_pairs) * edge_share_covariance(p);
}

double edge_share_covariance(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw_param("edge probability must lie in [0,1]");
  // two triangles on one shared edge span 5 edges: E[X X'] = p^5
  const double p2 = p * p;
  return p2 * p2 * p * (1.0 - p);
}

double falling_factorial(int n, int k) {
  if (k < 0) throw_param("falling factorial needs k >= 0");
  long double acc = 1.0L;
  for (int i = 0; i < k; ++i) acc *= static_cast<long double>(n) - i;
  return static_cast<double>(acc);
}

double double_factorial_odd(int k) {
  double acc = 1.0;
  for (int i = k; i >= 2; i -= 2) acc *= i;
  return acc;
}

double predicted_central_moment(int n, double p, int k) {
  validate_probability(p);
  if (k < 0) throw_param("moment order must be nonnegative");
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;  // odd moments are lower order; leading term vanishes
  const double c = edge_share_covariance(p);
  return falling_factorial(n, 2 * k) * std::pow(c, k / 2.0) * double_factorial_odd(k - 1) /
         std::pow(2.0, k / 2.0);
}

double gaussian_moment(int k) {
  if (k < 0) throw_param("moment order must be nonnegative");
  if (k % 2 == 1) return 0.0;
  return double_factorial_odd(k - 1);
}

MomentAccumulator::MomentAccumulator(int k_max) : k_max_(k_max) {
  if (k_max < 1 || k_max > 8) throw_param("moment order must be in [1,8]");
  sums_.resize(static_cast<std::size_t>(2) * k_max);
}

void MomentAccumulator::add(double r) noexcept {
  double power = 1.0;
  for (auto& s : sums_) {
    power *= r;
    s.add(power);
  }
  ++count_;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.k_max_ != k_max_) throw_param("cannot merge accumulators of different order");
  for (std::size_t i = 0; i < sums_.size(); ++i) sums_[i].merge(other.sums_[i]);
  count_ += other.count_;
}

double MomentAccumulator::moment(int k) const {
  if (k < 1 || k > 2 * k_max_) throw_param("moment order out of range");
  if (count_ == 0) throw_param("no samples accumulated");
  return sums_[static_cast<std::size_t>(k) - 1].value() / static_cast<double>(count_);
}

double MomentAccumulator::std_error(int k) const {
  if (k < 1 || k > k_max_) throw_param("moment order out of range");
  const double mk = moment(k);
  const double m2k = moment(2 * k);
  const double var = std::max(0.0, m2k - mk * mk);
  return std::sqrt(var / static_cast<double>(count_));
}

EmpiricalMoments empirical_moments(std::span<const double> r_values, int k_max) {
  if (r_values.empty()) throw_param("moment estimation needs a nonempty stream");
  MomentAccumulator acc(k_max);
  for (double r : r_values) acc.add(r);
  EmpiricalMoments out;
  out.k_max = k_max;
  out.sample_count = acc.count();
  for (int k = 1; k <= k_max; ++k) {
    out.estimates.push_back(acc.moment(k));
    out.std_errors.push_back(acc.std_error(k));
  }
  return out;
}

EmpiricalMoments empirical_triangle_moments(const GraphParams& params, std::uint64_t samples,
                                            int k_max, int threads) {
  params.validate();
  if (samples == 0) throw_param("moment estimation needs at least one sample");
  if (params.n < 4) throw_param("standardized moments need n >= 4");

  const double mu = mean_triangles(params.n, params.p);
  const double sigma = std::sqrt(variance_triangles(params.n, params.p));

  struct Shard {
    MomentAccumulator acc{8};
    bool used = false;
  };
  auto states = run_sharded<Shard>(samples, threads, [&](Shard& shard, std::uint64_t begin,
                                                         std::uint64_t end) {
    shard.acc = MomentAccumulator(k_max);
    shard.used = true;
    BitAdjacency scratch;
    GraphParams gp = params;
    for (std::uint64_t i = begin; i < end; ++i) {
      gp.sample_index = params.sample_index + i;
      sample_gnp_into(gp, scratch);
      const double r = (static_cast<double>(count_triangles(scratch)) - mu) / sigma;
      shard.acc.add(r);
    }
  });

  MomentAccumulator total(k_max);
  for (const Shard& s : states) {
    if (s.used) total.merge(s.acc);
  }
  EmpiricalMoments out;
  out.k_max = k_max;
  out.sample_count = total.count();
  for (int k = 1; k <= k_max; ++k) {
    out.estimates.push_back(total.moment(k));
    out.std_errors.push_back(total.std_error(k));
  }
  return out;
}

MomentReport make_moment_report(const GraphParams& params, std::uint64_t samples, int k_max,
                                int threads) {
  MomentReport report;
  report.n = params.n;
  report.p = params.p;
  report.mean = mean_triangles(params.n, params.p);
  report.variance = variance_triangles(params.n, params.p);
  report.empirical = empirical_triangle_moments(params, samples, k_max, threads);
  report.sample_count = report.empirical.sample_count;
  for (int k = 1; k <= k_max; ++k) report.predicted.push_back(gaussian_moment(k));
  return report;
}

}  // namespace trillt
