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

#include "core/spectral.hpp"

#include <cmath>
#include <numbers>

#include "core/moments.hpp"

namespace trillt {

LatticeSpec LatticeSpec::for_graph(int n, double p) {
  if (n < 3) throw_param("lattice needs n >= 3");
  LatticeSpec spec;
  spec.shift = mean_triangles(n, p);
  spec.scale = std::sqrt(variance_triangles(n, p));
  return spec;
}

const char* region_name(TRegion r) {
  switch (r) {
    case TRegion::R1: return "R1";
    case TRegion::R2: return "R2";
    case TRegion::R3: return "R3";
  }
  return "R?";
}

TRegion classify_region(double t, double boundary_a, int n) {
  const double at = std::abs(t);
  if (at < boundary_a) return TRegion::R1;
  if (at < std::pow(static_cast<double>(n), 0.55)) return TRegion::R2;
  return TRegion::R3;
}

CharFunProfile empirical_charfun(std::span<const double> r_values, std::span<const double> t_grid,
                                 int n, double p, double region_boundary) {
  if (r_values.empty()) throw_param("characteristic function estimation needs samples");

  CharFunProfile profile;
  profile.n = n;
  profile.p = p;
  profile.sample_count = r_values.size();
  profile.region_boundary = region_boundary;
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(r_values.size()));

  for (double t : t_grid) {
    NeumaierSum re, im;
    for (double r : r_values) {
      re.add(std::cos(t * r));
      im.add(std::sin(t * r));
    }
    const double m = static_cast<double>(r_values.size());
    profile.t_values.push_back(t);
    profile.estimates.emplace_back(re.value() / m, im.value() / m);
    profile.std_errors.push_back(inv_sqrt_m);
    profile.regions.push_back(classify_region(t, region_boundary, n));
  }
  return profile;
}

CharFunProfile charfun_from_pmf(const PmfTable& pmf, std::span<const double> t_grid,
                                double region_boundary) {
  pmf.validate();
  const LatticeSpec lattice = LatticeSpec::for_graph(pmf.n, pmf.p);

  CharFunProfile profile;
  profile.n = pmf.n;
  profile.p = pmf.p;
  profile.sample_count = pmf.sample_count;
  profile.region_boundary = region_boundary;
  const double inv_sqrt_m =
      pmf.kind == PmfKind::empirical && pmf.sample_count > 0
          ? 1.0 / std::sqrt(static_cast<double>(pmf.sample_count))
          : 0.0;

  for (double t : t_grid) {
    profile.t_values.push_back(t);
    profile.estimates.push_back(exact_charfun(pmf, lattice, t));
    profile.std_errors.push_back(inv_sqrt_m);
    profile.regions.push_back(classify_region(t, region_boundary, pmf.n));
  }
  return profile;
}

double gaussian_charfun(double t) { return std::exp(-0.5 * t * t); }

double nearest_integer_distance(double x) {
  const double frac = x - std::floor(x);
  return std::min(frac, 1.0 - frac);
}

BernoulliBound bernoulli_bound_check(double p, double theta) {
  if (!(p >= 0.0 && p <= 1.0)) throw_param("edge probability must lie in [0,1]");
  BernoulliBound out;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  out.lhs = std::hypot(p + (1.0 - p) * c, (1.0 - p) * s);
  const double dist = nearest_integer_distance(theta / (2.0 * std::numbers::pi));
  out.rhs = 1.0 - 8.0 * p * (1.0 - p) * dist * dist;
  out.holds = out.lhs <= out.rhs + 1e-12;
  return out;
}

namespace {

std::complex<double> simpson(const std::function<std::complex<double>(double)>& f, double a,
                             double b, int segments) {
  const double h = (b - a) / segments;
  std::complex<double> odd{0.0, 0.0};
  std::complex<double> even{0.0, 0.0};
  for (int i = 1; i < segments; i += 2) odd += f(a + i * h);
  for (int i = 2; i < segments; i += 2) even += f(a + i * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

}  // namespace

InversionResult invert_charfun(const std::function<std::complex<double>(double)>& psi,
                               const LatticeSpec& lattice, double y, int quadrature_points) {
  if (!(lattice.scale > 0.0)) throw_param("lattice scale must be positive");
  if (!lattice.contains(y)) throw_param("inversion target is not a lattice point");
  if (quadrature_points < 2) quadrature_points = 2;

  const double b = lattice.scale;
  const double limit = std::numbers::pi * b;
  const double norm = 1.0 / (2.0 * std::numbers::pi * b);
  auto integrand = [&](double t) {
    return std::exp(std::complex<double>(0.0, -t * y)) * psi(t);
  };

  int segments = quadrature_points + (quadrature_points & 1);
  std::complex<double> prev = simpson(integrand, -limit, limit, segments) * norm;
  constexpr int kMaxSegments = 1 << 22;
  while (segments < kMaxSegments) {
    segments *= 2;
    const std::complex<double> cur = simpson(integrand, -limit, limit, segments) * norm;
    if (std::abs(cur - prev) < 1e-11) {
      return {cur.real(), cur.imag()};
    }
    prev = cur;
  }
  throw_numeric("lattice inversion quadrature did not converge");
}

const char* decay_status_name(DecayStatus s) {
  switch (s) {
    case DecayStatus::ok: return "ok";
    case DecayStatus::exceeds: return "exceeds";
    case DecayStatus::inconclusive: return "inconclusive";
    case DecayStatus::reference: return "reference";
  }
  return "?";
}

std::vector<DecayRow> decay_profile(const CharFunProfile& profile, double bound_constant) {
  if (profile.sample_count > 0 && profile.sample_count < 100000) {
    throw_param("decay profiling needs at least 1e5 samples");
  }
  const double noise_floor =
      profile.sample_count > 0 ? 3.0 / std::sqrt(static_cast<double>(profile.sample_count)) : 0.0;

  std::vector<DecayRow> rows;
  rows.reserve(profile.t_values.size());
  for (std::size_t i = 0; i < profile.t_values.size(); ++i) {
    DecayRow row;
    row.t = profile.t_values[i];
    row.region = profile.regions[i];
    row.abs_psi = std::abs(profile.estimates[i]);
    row.std_error = profile.std_errors[i];
    if (row.region == TRegion::R1) {
      row.gauss_gap = std::abs(profile.estimates[i] -
                               std::complex<double>(gaussian_charfun(row.t), 0.0));
      row.status = DecayStatus::reference;
    } else {
      const double exponent = row.region == TRegion::R2 ? 1.0 + kDecayDelta : 50.0;
      row.bound = bound_constant / std::pow(std::abs(row.t), exponent);
      if (row.bound <= noise_floor) {
        row.status = DecayStatus::inconclusive;
      } else if (row.abs_psi > row.bound + 3.0 * row.std_error) {
        row.status = DecayStatus::exceeds;
      } else {
        row.status = DecayStatus::ok;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace trillt
