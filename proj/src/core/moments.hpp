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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "core/bitadjacency.hpp"

namespace trillt {

/// Compensated (Neumaier) running sum.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  void merge(const NeumaierSum& other) noexcept {
    add(other.sum);
    comp += other.comp;
  }
  double value() const noexcept { return sum + comp; }
};

double binomial_coeff3(int n);  // C(n,3), 0 for n < 3

/// E[S_n] = p^3 C(n,3). Returns 0 for n < 3 (no triples).
double mean_triangles(int n, double p);

/// Exact Var[S_n]: C(n,3) p^3(1-p^3) identical-pair term plus
/// n(n-1)(n-2)(n-3)/2 ordered pairs sharing one edge, each contributing
/// p^5 - p^6. Accepts n >= 3 (at n = 3 this is the Bernoulli variance).
double variance_triangles(int n, double p);

/// C(p) = E[(X_t - p^3)(X_t' - p^3)] for triangles sharing exactly one
/// edge: p^5 (1 - p).
double edge_share_covariance(double p);

/// Leading term of the k-th central moment of S_n:
/// (n)_{2k} C(p)^{k/2} (k-1)!! / 2^{k/2} for even k, 0 for odd k, 1 for k=0.
double predicted_central_moment(int n, double p, int k);

/// Moments of N(0,1): (k-1)!! for even k, 0 for odd k.
double gaussian_moment(int k);

double falling_factorial(int n, int k);
double double_factorial_odd(int k);  // (k)!! for odd or zero k

/// One-pass streaming estimator of E[R^k] for k = 1..k_max, with standard
/// errors. Accumulators merge associatively, so sharded Monte Carlo runs
/// reduce deterministically.
class MomentAccumulator {
 public:
  explicit MomentAccumulator(int k_max = 4);

  void add(double r) noexcept;
  void merge(const MomentAccumulator& other);

  int k_max() const noexcept { return k_max_; }
  std::uint64_t count() const noexcept { return count_; }
  double moment(int k) const;
  double std_error(int k) const;

 private:
  int k_max_ = 0;
  std::uint64_t count_ = 0;
  std::vector<NeumaierSum> sums_;  // powers 1 .. 2*k_max
};

struct EmpiricalMoments {
  int k_max = 0;
  std::uint64_t sample_count = 0;
  std::vector<double> estimates;   // index k-1
  std::vector<double> std_errors;  // index k-1
};

/// Sample moments of a stream of standardized values.
EmpiricalMoments empirical_moments(std::span<const double> r_values, int k_max);

/// Samples G(n,p) and accumulates moments of R_n = (S_n - mu_n)/sigma_n.
EmpiricalMoments empirical_triangle_moments(const GraphParams& params, std::uint64_t samples,
                                            int k_max, int threads = 1);

struct MomentReport {
  int n = 0;
  double p = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  std::uint64_t sample_count = 0;
  EmpiricalMoments empirical;
  std::vector<double> predicted;  // gaussian moments, index k-1
};

MomentReport make_moment_report(const GraphParams& params, std::uint64_t samples, int k_max,
                                int threads = 1);

}  // namespace trillt
