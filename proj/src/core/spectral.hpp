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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/lattice.hpp"
#include "core/oracle.hpp"

namespace trillt {

// t-axis regions for the characteristic function of the standardized count:
// R1 = (-A, A), R2 = A <= |t| < n^0.55, R3 = n^0.55 <= |t|.
enum class TRegion { R1, R2, R3 };

const char* region_name(TRegion r);
TRegion classify_region(double t, double boundary_a, int n);

constexpr double kDefaultRegionBoundary = 3.0;  // the constant A
constexpr double kDecayDelta = 0.01;
constexpr double kDefaultDecayConstant = 10.0;  // the constant D

/// Monte Carlo estimates of psi_n(t) on a t grid, with 1/sqrt(m) error bound
/// per point and region labels.
struct CharFunProfile {
  int n = 0;
  double p = 0.0;
  std::uint64_t sample_count = 0;
  double region_boundary = kDefaultRegionBoundary;
  std::vector<double> t_values;
  std::vector<std::complex<double>> estimates;
  std::vector<double> std_errors;
  std::vector<TRegion> regions;
};

/// Estimate from an in-memory stream of standardized values.
CharFunProfile empirical_charfun(std::span<const double> r_values, std::span<const double> t_grid,
                                 int n, double p,
                                 double region_boundary = kDefaultRegionBoundary);

/// Same estimator evaluated from a frequency table: the triangle count is
/// integer valued, so the histogram is a sufficient statistic and the result
/// matches the streaming average over the same samples.
CharFunProfile charfun_from_pmf(const PmfTable& pmf, std::span<const double> t_grid,
                                double region_boundary = kDefaultRegionBoundary);

double gaussian_charfun(double t);  // exp(-t^2/2)

/// Distance from x to the nearest integer, in [0, 1/2].
double nearest_integer_distance(double x);

struct BernoulliBound {
  double lhs = 0.0;  // |p + (1-p) e^{i theta}|
  double rhs = 0.0;  // 1 - 8 p (1-p) ||theta/2pi||^2
  bool holds = false;
};

/// Checks |p + (1-p)e^{i theta}| <= 1 - 8p(1-p) ||theta/2pi||^2.
BernoulliBound bernoulli_bound_check(double p, double theta);

struct InversionResult {
  double value = 0.0;          // recovered point probability
  double imag_residue = 0.0;   // should vanish for true characteristic functions
};

/// Lattice Fourier inversion: (1/2 pi b) \int_{-pi b}^{pi b} e^{-ity} psi(t) dt
/// for a lattice point y. Composite Simpson quadrature starting from
/// quadrature_points segments, doubling until successive values agree to
/// 1e-10; failure to converge is a numeric error.
InversionResult invert_charfun(const std::function<std::complex<double>(double)>& psi,
                               const LatticeSpec& lattice, double y, int quadrature_points);

enum class DecayStatus { ok, exceeds, inconclusive, reference };

struct DecayRow {
  double t = 0.0;
  TRegion region = TRegion::R1;
  double abs_psi = 0.0;
  double std_error = 0.0;
  double bound = 0.0;      // D/|t|^{1.01} in R2, D/|t|^{50} in R3, unused in R1
  double gauss_gap = 0.0;  // |psi - e^{-t^2/2}|, reported in R1
  DecayStatus status = DecayStatus::ok;
};

const char* decay_status_name(DecayStatus s);

/// Annotates profile points with the applicable polynomial decay envelope.
/// R1 points are compared against the Gaussian instead. A point fails only
/// when the estimate exceeds bound + 3 std_error and the bound itself sits
/// above the Monte Carlo noise floor 3/sqrt(m); otherwise-unresolvable
/// points are marked inconclusive.
std::vector<DecayRow> decay_profile(const CharFunProfile& profile,
                                    double bound_constant = kDefaultDecayConstant);

}  // namespace trillt
