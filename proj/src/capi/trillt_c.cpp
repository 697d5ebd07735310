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

#include "trillt.h"

#include <cmath>
#include <cstring>
#include <sstream>
#include <string>

#include "core/bitadjacency.hpp"
#include "core/io.hpp"
#include "core/limitlaw.hpp"
#include "core/moments.hpp"
#include "core/oracle.hpp"
#include "core/probe.hpp"
#include "core/spectral.hpp"
#include "core/triangles.hpp"

using namespace trillt;

struct trillt_graph {
  BitAdjacency adj;
};
struct trillt_pmf {
  PmfTable table;
};
struct trillt_charfun_profile {
  CharFunProfile profile;
};
struct trillt_discrepancy {
  DiscrepancyReport report;
};
struct trillt_probe_report {
  ProbeReport report;
};

namespace {

thread_local std::string g_last_error;

trillt_status to_status(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case ErrorCode::param: return TRILLT_ERR_PARAM;
    case ErrorCode::numeric: return TRILLT_ERR_NUMERIC;
    case ErrorCode::underpowered: return TRILLT_ERR_UNDERPOWERED;
    case ErrorCode::io: return TRILLT_ERR_IO;
  }
  return TRILLT_ERR_PARAM;
}

template <class Fn>
trillt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TRILLT_OK;
  } catch (const Error& e) {
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRILLT_ERR_NUMERIC;
  }
}

trillt_status require(bool ok, const char* message) {
  if (ok) return TRILLT_OK;
  g_last_error = message;
  return TRILLT_ERR_PARAM;
}

}  // namespace

extern "C" {

const char* trillt_version(void) { return TRILLT_VERSION_STRING; }

const char* trillt_last_error(void) { return g_last_error.c_str(); }

/* ---------------- graphs ---------------- */

trillt_status trillt_graph_sample(int32_t n, double p, uint64_t seed, uint64_t sample_index,
                                  trillt_graph** out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, sample_index};
    auto* g = new trillt_graph{sample_gnp(params)};
    *out = g;
  });
}

void trillt_graph_free(trillt_graph* g) { delete g; }

trillt_status trillt_graph_edge(const trillt_graph* g, int32_t u, int32_t v, int* out) {
  if (trillt_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    if (u < 0 || v < 0 || u >= g->adj.n() || v >= g->adj.n()) {
      throw_param("vertex index out of range");
    }
    *out = (u != v && g->adj.edge(u, v)) ? 1 : 0;
  });
}

trillt_status trillt_graph_edge_count(const trillt_graph* g, int64_t* out) {
  if (trillt_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = g->adj.edge_count(); });
}

trillt_status trillt_graph_codegree(const trillt_graph* g, int32_t u, int32_t v, int64_t* out) {
  if (trillt_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = codegree(g->adj, u, v); });
}

trillt_status trillt_graph_triangles(const trillt_graph* g, int64_t* out) {
  if (trillt_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = count_triangles(g->adj); });
}

trillt_status trillt_graph_dump(const trillt_graph* g, const char* path) {
  if (trillt_status s = require(g && path, "null argument")) return s;
  return guarded([&] {
    std::ostringstream os;
    dump_graph(g->adj, os);
    io::write_file(path, os.str());
  });
}

/* ---------------- closed-form moments ---------------- */

trillt_status trillt_mean_triangles(int32_t n, double p, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = mean_triangles(n, p); });
}

trillt_status trillt_variance_triangles(int32_t n, double p, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = variance_triangles(n, p); });
}

trillt_status trillt_edge_share_covariance(double p, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = edge_share_covariance(p); });
}

trillt_status trillt_predicted_central_moment(int32_t n, double p, int32_t k, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = predicted_central_moment(n, p, k); });
}

trillt_status trillt_gaussian_moment(int32_t k, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = gaussian_moment(k); });
}

trillt_status trillt_normalize_count(int64_t s_count, int32_t n, double p, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = normalize_count(s_count, n, p); });
}

/* ---------------- pmf tables ---------------- */

trillt_status trillt_exact_pmf(int32_t n, double p, int force, trillt_pmf** out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new trillt_pmf{exact_pmf(n, p, force != 0)}; });
}

trillt_status trillt_empirical_pmf(int32_t n, double p, uint64_t seed, uint64_t samples,
                                   int threads, trillt_pmf** out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, 0};
    *out = new trillt_pmf{empirical_pmf(params, samples, threads)};
  });
}

void trillt_pmf_free(trillt_pmf* pmf) { delete pmf; }

size_t trillt_pmf_size(const trillt_pmf* pmf) { return pmf ? pmf->table.support.size() : 0; }

trillt_status trillt_pmf_point(const trillt_pmf* pmf, size_t index, int64_t* k, double* prob) {
  if (trillt_status s = require(pmf && k && prob, "null argument")) return s;
  if (trillt_status s = require(index < pmf->table.support.size(), "index out of range")) {
    return s;
  }
  *k = pmf->table.support[index];
  *prob = pmf->table.probs[index];
  return TRILLT_OK;
}

trillt_status trillt_pmf_statistics(const trillt_pmf* pmf, int32_t q, double* mean,
                                    double* variance, double* mod_q) {
  if (trillt_status s = require(pmf && mean && variance, "null argument")) return s;
  return guarded([&] {
    const PmfStatistics stats = pmf_statistics(pmf->table, q);
    *mean = stats.mean;
    *variance = stats.variance;
    if (q >= 2 && mod_q) {
      for (int a = 0; a < q; ++a) mod_q[a] = stats.mod_q[static_cast<std::size_t>(a)];
    }
  });
}

trillt_status trillt_pmf_charfun(const trillt_pmf* pmf, double t, double* re, double* im) {
  if (trillt_status s = require(pmf && re && im, "null argument")) return s;
  return guarded([&] {
    const LatticeSpec lattice = LatticeSpec::for_graph(pmf->table.n, pmf->table.p);
    const auto value = exact_charfun(pmf->table, lattice, t);
    *re = value.real();
    *im = value.imag();
  });
}

trillt_status trillt_pmf_invert_charfun(const trillt_pmf* pmf, int64_t k,
                                        int32_t quadrature_points, double* prob,
                                        double* imag_residue) {
  if (trillt_status s = require(pmf && prob, "null argument")) return s;
  return guarded([&] {
    const LatticeSpec lattice = LatticeSpec::for_graph(pmf->table.n, pmf->table.p);
    auto psi = [&](double t) { return exact_charfun(pmf->table, lattice, t); };
    const InversionResult r = invert_charfun(psi, lattice, lattice.point(k), quadrature_points);
    *prob = r.value;
    if (imag_residue) *imag_residue = r.imag_residue;
  });
}

trillt_status trillt_pmf_save_csv(const trillt_pmf* pmf, const char* path) {
  if (trillt_status s = require(pmf && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::pmf_to_csv(pmf->table)); });
}

trillt_status trillt_pmf_save_json(const trillt_pmf* pmf, const char* path) {
  if (trillt_status s = require(pmf && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::pmf_to_json(pmf->table)); });
}

trillt_status trillt_invert_charfun(trillt_charfun_fn fn, void* user, double lattice_shift,
                                    double lattice_scale, double y, int32_t quadrature_points,
                                    double* prob, double* imag_residue) {
  if (trillt_status s = require(fn && prob, "null argument")) return s;
  return guarded([&] {
    LatticeSpec lattice{lattice_shift, lattice_scale};
    auto psi = [&](double t) {
      double re = 0.0, im = 0.0;
      fn(t, &re, &im, user);
      return std::complex<double>(re, im);
    };
    const InversionResult r = invert_charfun(psi, lattice, y, quadrature_points);
    *prob = r.value;
    if (imag_residue) *imag_residue = r.imag_residue;
  });
}

/* ---------------- spectral helpers ---------------- */

double trillt_gaussian_charfun(double t) { return gaussian_charfun(t); }

double trillt_nearest_integer_distance(double x) { return nearest_integer_distance(x); }

trillt_status trillt_bernoulli_bound(double p, double theta, double* lhs, double* rhs,
                                     int* holds) {
  if (trillt_status s = require(lhs && rhs && holds, "null argument")) return s;
  return guarded([&] {
    const BernoulliBound b = bernoulli_bound_check(p, theta);
    *lhs = b.lhs;
    *rhs = b.rhs;
    *holds = b.holds ? 1 : 0;
  });
}

trillt_status trillt_empirical_charfun(int32_t n, double p, uint64_t seed, uint64_t samples,
                                       const double* t_values, size_t t_count,
                                       double region_boundary, int threads,
                                       trillt_charfun_profile** out) {
  if (trillt_status s = require(out && t_values && t_count > 0, "null or empty t grid")) {
    return s;
  }
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, 0};
    const PmfTable pmf = empirical_pmf(params, samples, threads);
    const std::span<const double> grid(t_values, t_count);
    *out = new trillt_charfun_profile{charfun_from_pmf(pmf, grid, region_boundary)};
  });
}

void trillt_profile_free(trillt_charfun_profile* prof) { delete prof; }

size_t trillt_profile_size(const trillt_charfun_profile* prof) {
  return prof ? prof->profile.t_values.size() : 0;
}

trillt_status trillt_profile_point(const trillt_charfun_profile* prof, size_t index, double* t,
                                   double* re, double* im, double* std_error, char* region) {
  if (trillt_status s = require(prof != nullptr, "null profile")) return s;
  if (trillt_status s = require(index < prof->profile.t_values.size(), "index out of range")) {
    return s;
  }
  if (t) *t = prof->profile.t_values[index];
  if (re) *re = prof->profile.estimates[index].real();
  if (im) *im = prof->profile.estimates[index].imag();
  if (std_error) *std_error = prof->profile.std_errors[index];
  if (region) std::memcpy(region, region_name(prof->profile.regions[index]), 3);
  return TRILLT_OK;
}

trillt_status trillt_profile_save_csv(const trillt_charfun_profile* prof, const char* path) {
  if (trillt_status s = require(prof && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::profile_to_csv(prof->profile)); });
}

trillt_status trillt_profile_decay_csv(const trillt_charfun_profile* prof, double bound_constant,
                                       const char* path) {
  if (trillt_status s = require(prof && path, "null argument")) return s;
  return guarded([&] {
    io::write_file(path, io::decay_to_csv(decay_profile(prof->profile, bound_constant)));
  });
}

trillt_status trillt_profile_decay_violations(const trillt_charfun_profile* prof,
                                              double bound_constant, int32_t* violations,
                                              int32_t* inconclusive) {
  if (trillt_status s = require(prof && violations, "null argument")) return s;
  return guarded([&] {
    int32_t bad = 0, soft = 0;
    for (const DecayRow& row : decay_profile(prof->profile, bound_constant)) {
      if (row.status == DecayStatus::exceeds) ++bad;
      if (row.status == DecayStatus::inconclusive) ++soft;
    }
    *violations = bad;
    if (inconclusive) *inconclusive = soft;
  });
}

/* ---------------- local limit law ---------------- */

trillt_status trillt_sup_discrepancy(const trillt_pmf* pmf, trillt_discrepancy** out) {
  if (trillt_status s = require(pmf && out, "null argument")) return s;
  return guarded([&] {
    *out = new trillt_discrepancy{sup_discrepancy(pmf->table, pmf->table.n, pmf->table.p)};
  });
}

void trillt_discrepancy_free(trillt_discrepancy* rep) { delete rep; }

trillt_status trillt_discrepancy_summary(const trillt_discrepancy* rep, double* sup,
                                         int64_t* argmax_k, double* argmax_x,
                                         double* mc_error_bound) {
  if (trillt_status s = require(rep != nullptr, "null report")) return s;
  if (sup) *sup = rep->report.sup_discrepancy;
  if (argmax_k) *argmax_k = rep->report.argmax_k;
  if (argmax_x) *argmax_x = rep->report.argmax_x;
  if (mc_error_bound) *mc_error_bound = rep->report.mc_error_bound;
  return TRILLT_OK;
}

trillt_status trillt_discrepancy_save_json(const trillt_discrepancy* rep, const char* path) {
  if (trillt_status s = require(rep && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::discrepancy_to_json(rep->report)); });
}

trillt_status trillt_discrepancy_save_csv(const trillt_discrepancy* rep, const char* path) {
  if (trillt_status s = require(rep && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::discrepancy_to_csv(rep->report)); });
}

trillt_status trillt_discrete_gaussian_reference(int64_t k, int32_t n, double p, double* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = discrete_gaussian_reference(k, n, p); });
}

trillt_status trillt_minimum_llt_samples(int32_t n, double p, uint64_t* out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = minimum_llt_samples(n, p); });
}

trillt_status trillt_mod_q_histogram(int32_t n, double p, uint64_t seed, uint64_t samples,
                                     int32_t q, int threads, double* freqs, double* max_dev) {
  if (trillt_status s = require(freqs && max_dev, "null argument")) return s;
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, 0};
    const ModQResult result = mod_q_histogram(params, samples, q, threads);
    for (int a = 0; a < q; ++a) freqs[a] = result.freqs[static_cast<std::size_t>(a)];
    *max_dev = result.max_dev;
  });
}

/* ---------------- conditioning experiments ---------------- */

trillt_status trillt_run_decomposition(int32_t n, double p, int32_t k, uint64_t seed,
                                       uint64_t trials, int threads, trillt_probe_report** out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const MatchingPlan plan = build_matching_plan(n, k);
    GraphParams params{static_cast<int>(n), p, seed, 0};
    *out = new trillt_probe_report{run_decomposition_trials(params, plan, trials, threads)};
  });
}

trillt_status trillt_run_hvector(int32_t n, double p, int32_t u_size, uint64_t seed,
                                 uint64_t trials, int threads, trillt_probe_report** out) {
  if (trillt_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = new trillt_probe_report{
        run_h_experiments(n, p, u_size, seed, trials, threads, /*collect_coordinates=*/true)};
  });
}

void trillt_probe_report_free(trillt_probe_report* rep) { delete rep; }

trillt_status trillt_probe_report_field(const trillt_probe_report* rep, const char* name,
                                        double* out) {
  if (trillt_status s = require(rep && name && out, "null argument")) return s;
  const ProbeReport& r = rep->report;
  const std::string key(name);
  if (key == "z_mean") *out = r.z_mean;
  else if (key == "z_var") *out = r.z_var;
  else if (key == "z_var_bound") *out = r.z_var_bound;
  else if (key == "bad_L_freq") *out = r.bad_L_freq;
  else if (key == "y_e_min") *out = static_cast<double>(r.y_e_min);
  else if (key == "y_e_mean") *out = r.y_e_mean;
  else if (key == "c0_total") *out = static_cast<double>(r.totals.c0);
  else if (key == "c1_total") *out = static_cast<double>(r.totals.c1);
  else if (key == "c2_total") *out = static_cast<double>(r.totals.c2);
  else if (key == "c3_total") *out = static_cast<double>(r.totals.c3);
  else if (key == "h_coord_mean") *out = r.h_coord_mean;
  else if (key == "h_coord_variance") *out = r.h_coord_variance;
  else if (key == "h_band_fraction") *out = r.h_band_fraction;
  else if (key == "lambda_e_freq") *out = r.lambda_e_freq;
  else if (key == "lambda_global_freq") *out = r.lambda_global_freq;
  else if (key == "good_pair_freq") *out = r.good_pair_freq;
  else if (key == "band_lo") *out = r.band_lo;
  else if (key == "band_hi") *out = r.band_hi;
  else if (key == "trials") *out = static_cast<double>(r.trials);
  else {
    g_last_error = "unknown probe report field: " + key;
    return TRILLT_ERR_PARAM;
  }
  return TRILLT_OK;
}

trillt_status trillt_probe_report_save_json(const trillt_probe_report* rep, const char* path) {
  if (trillt_status s = require(rep && path, "null argument")) return s;
  return guarded([&] { io::write_file(path, io::probe_report_to_json(rep->report)); });
}

trillt_status trillt_probe_report_save_coords_csv(const trillt_probe_report* rep,
                                                  const char* path) {
  if (trillt_status s = require(rep && path, "null argument")) return s;
  return guarded([&] {
    if (rep->report.h_coord_means.empty()) {
      throw_param("no per-coordinate statistics were collected");
    }
    io::write_file(path, io::probe_coords_to_csv(rep->report));
  });
}

/* ---------------- empirical moments ---------------- */

trillt_status trillt_empirical_moments(int32_t n, double p, uint64_t seed, uint64_t samples,
                                       int32_t k_max, int threads, double* estimates,
                                       double* std_errors) {
  if (trillt_status s = require(estimates != nullptr, "null output pointer")) return s;
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, 0};
    const EmpiricalMoments m = empirical_triangle_moments(params, samples, k_max, threads);
    for (int k = 1; k <= k_max; ++k) {
      estimates[k - 1] = m.estimates[static_cast<std::size_t>(k) - 1];
      if (std_errors) std_errors[k - 1] = m.std_errors[static_cast<std::size_t>(k) - 1];
    }
  });
}

trillt_status trillt_moment_report_save_json(int32_t n, double p, uint64_t seed,
                                             uint64_t samples, int32_t k_max, int threads,
                                             const char* path) {
  if (trillt_status s = require(path != nullptr, "null path")) return s;
  return guarded([&] {
    GraphParams params{static_cast<int>(n), p, seed, 0};
    const MomentReport report = make_moment_report(params, samples, k_max, threads);
    io::write_file(path, io::moment_report_to_json(report));
  });
}

}  // extern "C"
