/* Copyright 2026 The trillt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* trillt: Monte Carlo and exact-enumeration toolkit for the local limit
 * behavior of triangle counts in dense Erdos-Renyi random graphs.
 *
 * Every function returns trillt_status unless noted. Out-parameters are
 * written only on TRILLT_OK. Handles are opaque; release them with the
 * matching *_free call. Handles are not internally synchronized, but
 * read-only use from several threads is safe.
 *
 * Reproducibility contract: any sampling call with equal parameters
 * (including the seed) produces identical results, independent of the
 * thread count.
 */

#ifndef TRILLT_H
#define TRILLT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TRILLT_VERSION_STRING "0.1.0"

typedef enum trillt_status {
  TRILLT_OK = 0,
  TRILLT_ERR_PARAM = 2,        /* invalid argument */
  TRILLT_ERR_NUMERIC = 3,      /* quadrature or numeric failure */
  TRILLT_ERR_UNDERPOWERED = 4, /* sample count below the noise gate */
  TRILLT_ERR_IO = 5            /* file system failure */
} trillt_status;

const char* trillt_version(void);

/* Message for the most recent failing call on this thread; "" if none. */
const char* trillt_last_error(void);

/* ---------------- graphs ---------------- */

typedef struct trillt_graph trillt_graph;

trillt_status trillt_graph_sample(int32_t n, double p, uint64_t seed,
                                  uint64_t sample_index, trillt_graph** out);
void trillt_graph_free(trillt_graph* g);

trillt_status trillt_graph_edge(const trillt_graph* g, int32_t u, int32_t v, int* out);
trillt_status trillt_graph_edge_count(const trillt_graph* g, int64_t* out);
trillt_status trillt_graph_codegree(const trillt_graph* g, int32_t u, int32_t v, int64_t* out);
trillt_status trillt_graph_triangles(const trillt_graph* g, int64_t* out);

/* Debug fixture format: "n" then lower-triangle hex rows. */
trillt_status trillt_graph_dump(const trillt_graph* g, const char* path);

/* ---------------- closed-form moments ---------------- */

trillt_status trillt_mean_triangles(int32_t n, double p, double* out);
trillt_status trillt_variance_triangles(int32_t n, double p, double* out);
trillt_status trillt_edge_share_covariance(double p, double* out);
trillt_status trillt_predicted_central_moment(int32_t n, double p, int32_t k, double* out);
trillt_status trillt_gaussian_moment(int32_t k, double* out);
trillt_status trillt_normalize_count(int64_t s, int32_t n, double p, double* out);

/* ---------------- pmf tables ---------------- */

typedef struct trillt_pmf trillt_pmf;

/* Exhaustive enumeration of all 2^C(n,2) graphs; n > 7 needs force != 0,
 * n > 8 is always refused. */
trillt_status trillt_exact_pmf(int32_t n, double p, int force, trillt_pmf** out);
trillt_status trillt_empirical_pmf(int32_t n, double p, uint64_t seed, uint64_t samples,
                                   int threads, trillt_pmf** out);
void trillt_pmf_free(trillt_pmf* pmf);

size_t trillt_pmf_size(const trillt_pmf* pmf);
trillt_status trillt_pmf_point(const trillt_pmf* pmf, size_t index, int64_t* k, double* prob);
trillt_status trillt_pmf_statistics(const trillt_pmf* pmf, int32_t q, double* mean,
                                    double* variance, double* mod_q /* length q or NULL */);
trillt_status trillt_pmf_charfun(const trillt_pmf* pmf, double t, double* re, double* im);

/* Lattice inversion of the table's own characteristic function at count k. */
trillt_status trillt_pmf_invert_charfun(const trillt_pmf* pmf, int64_t k,
                                        int32_t quadrature_points, double* prob,
                                        double* imag_residue);
trillt_status trillt_pmf_save_csv(const trillt_pmf* pmf, const char* path);
trillt_status trillt_pmf_save_json(const trillt_pmf* pmf, const char* path);

/* Generic lattice Fourier inversion for a caller-supplied characteristic
 * function on the lattice {(k - shift)/scale}. */
typedef void (*trillt_charfun_fn)(double t, double* re, double* im, void* user);
trillt_status trillt_invert_charfun(trillt_charfun_fn fn, void* user, double lattice_shift,
                                    double lattice_scale, double y, int32_t quadrature_points,
                                    double* prob, double* imag_residue);

/* ---------------- spectral helpers ---------------- */

double trillt_gaussian_charfun(double t);
double trillt_nearest_integer_distance(double x);

/* lhs = |p + (1-p)e^{i theta}|, rhs = 1 - 8p(1-p)||theta/2pi||^2 */
trillt_status trillt_bernoulli_bound(double p, double theta, double* lhs, double* rhs,
                                     int* holds);

typedef struct trillt_charfun_profile trillt_charfun_profile;

/* Monte Carlo estimate of psi_n(t) = E exp(i t R_n) on a t grid.
 * region_boundary is the |t| below which points are labeled R1. */
trillt_status trillt_empirical_charfun(int32_t n, double p, uint64_t seed, uint64_t samples,
                                       const double* t_values, size_t t_count,
                                       double region_boundary, int threads,
                                       trillt_charfun_profile** out);
void trillt_profile_free(trillt_charfun_profile* prof);
size_t trillt_profile_size(const trillt_charfun_profile* prof);

/* region receives "R1", "R2" or "R3"; pass a buffer of >= 3 bytes. */
trillt_status trillt_profile_point(const trillt_charfun_profile* prof, size_t index, double* t,
                                   double* re, double* im, double* std_error, char* region);
trillt_status trillt_profile_save_csv(const trillt_charfun_profile* prof, const char* path);

/* Decay table against D/|t|^1.01 (R2) and D/|t|^50 (R3) envelopes. */
trillt_status trillt_profile_decay_csv(const trillt_charfun_profile* prof,
                                       double bound_constant, const char* path);

/* Nonzero when some point exceeds its envelope beyond 3 standard errors
 * while the envelope sits above the 3/sqrt(m) noise floor. */
trillt_status trillt_profile_decay_violations(const trillt_charfun_profile* prof,
                                              double bound_constant, int32_t* violations,
                                              int32_t* inconclusive);

/* ---------------- local limit law ---------------- */

typedef struct trillt_discrepancy trillt_discrepancy;

/* Sup over lattice points of |sigma p_hat(x) - N(x)|; empirical tables with
 * a Monte Carlo error bound above N(0)/2 fail with TRILLT_ERR_UNDERPOWERED. */
trillt_status trillt_sup_discrepancy(const trillt_pmf* pmf, trillt_discrepancy** out);
void trillt_discrepancy_free(trillt_discrepancy* rep);

trillt_status trillt_discrepancy_summary(const trillt_discrepancy* rep, double* sup,
                                         int64_t* argmax_k, double* argmax_x,
                                         double* mc_error_bound);
trillt_status trillt_discrepancy_save_json(const trillt_discrepancy* rep, const char* path);
trillt_status trillt_discrepancy_save_csv(const trillt_discrepancy* rep, const char* path);

/* Predicted point probability N((k - mu_n)/sigma_n)/sigma_n. */
trillt_status trillt_discrete_gaussian_reference(int64_t k, int32_t n, double p, double* out);

/* Certain-refusal floor for discrepancy sample counts at (n, p); fewer
 * samples always fail the gate, counts near the floor may still fail on
 * the realized frequencies. */
trillt_status trillt_minimum_llt_samples(int32_t n, double p, uint64_t* out);

trillt_status trillt_mod_q_histogram(int32_t n, double p, uint64_t seed, uint64_t samples,
                                     int32_t q, int threads, double* freqs /* length q */,
                                     double* max_dev);

/* ---------------- conditioning experiments ---------------- */

typedef struct trillt_probe_report trillt_probe_report;

/* Union-of-matchings split: triangles classified by edges inside the union
 * of k disjoint perfect matchings; wedge counts Y_e through the complement;
 * mean and variance of the two-edge class. n must be even, k <= n/4. */
trillt_status trillt_run_decomposition(int32_t n, double p, int32_t k, uint64_t seed,
                                       uint64_t trials, int threads,
                                       trillt_probe_report** out);

/* Two-sided exposure experiment on the pair-difference vector h. */
trillt_status trillt_run_hvector(int32_t n, double p, int32_t u_size, uint64_t seed,
                                 uint64_t trials, int threads, trillt_probe_report** out);
void trillt_probe_report_free(trillt_probe_report* rep);

/* Scalar fields by name, e.g. "z_var", "z_var_bound", "bad_L_freq",
 * "y_e_min", "lambda_e_freq", "lambda_global_freq", "good_pair_freq",
 * "z_mean", "h_coord_variance". Unknown names give TRILLT_ERR_PARAM. */
trillt_status trillt_probe_report_field(const trillt_probe_report* rep, const char* name,
                                        double* out);
trillt_status trillt_probe_report_save_json(const trillt_probe_report* rep, const char* path);
trillt_status trillt_probe_report_save_coords_csv(const trillt_probe_report* rep,
                                                  const char* path);

/* ---------------- empirical moments ---------------- */

/* Sample moments of R_n = (S_n - mu_n)/sigma_n up to order k_max (<= 8). */
trillt_status trillt_empirical_moments(int32_t n, double p, uint64_t seed, uint64_t samples,
                                       int32_t k_max, int threads,
                                       double* estimates /* length k_max */,
                                       double* std_errors /* length k_max */);
trillt_status trillt_moment_report_save_json(int32_t n, double p, uint64_t seed,
                                             uint64_t samples, int32_t k_max, int threads,
                                             const char* path);

#ifdef __cplusplus
}
#endif

#endif /* TRILLT_H */
