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

// Command-line front end. Everything goes through the public C API in
// trillt.h; this file owns only argument handling, output paths and the
// reproducibility manifest.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trillt.h"

namespace {

using nlohmann::json;

int status_to_exit(trillt_status s) { return static_cast<int>(s); }

[[noreturn]] void fail(trillt_status s) {
  std::fprintf(stderr, "error: %s\n", trillt_last_error());
  std::exit(status_to_exit(s));
}

void check(trillt_status s) {
  if (s != TRILLT_OK) fail(s);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: manifest cannot read back %s\n", path.c_str());
    std::exit(5);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  char hex[20];
  std::snprintf(hex, sizeof(hex), "%016" PRIx64, fnv1a64(buf.str()));
  return hex;
}

class Manifest {
 public:
  Manifest(int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
    for (int i = 0; i < argc; ++i) {
      if (i) command_ += ' ';
      command_ += argv[i];
    }
  }

  void set_param(const std::string& key, const json& value) { params_[key] = value; }

  void add_output(const std::string& path) { outputs_.push_back(path); }

  void write(const std::string& path) const {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json j;
    j["artifact_version"] = TRILLT_VERSION_STRING;
    j["command_line"] = command_;
    j["parameters"] = params_;
    j["wall_time_seconds"] = elapsed;
    json outs = json::array();
    for (const std::string& out : outputs_) {
      outs.push_back({{"path", out}, {"digest_fnv1a64", file_digest(out)}});
    }
    j["outputs"] = std::move(outs);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::fprintf(stderr, "error: cannot write manifest %s\n", path.c_str());
      std::exit(5);
    }
    f << j.dump(2) << '\n';
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::string command_;
  json params_ = json::object();
  std::vector<std::string> outputs_;
};

int default_threads() {
  if (const char* env = std::getenv("TRILLT_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

// Grid specs: "a:b:step" linear, "log:a:b:count" log-spaced, "1,2,3" explicit.
std::vector<double> parse_t_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.rfind("log:", 0) == 0) {
    double lo = 0, hi = 0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "log:%lf:%lf:%d", &lo, &hi, &count) != 3 || lo <= 0 ||
        hi <= lo || count < 2) {
      std::fprintf(stderr, "error: bad log grid spec '%s'\n", spec.c_str());
      std::exit(2);
    }
    const double ratio = std::pow(hi / lo, 1.0 / (count - 1));
    double t = lo;
    for (int i = 0; i < count; ++i, t *= ratio) grid.push_back(t);
    return grid;
  }
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0 || hi < lo) {
      std::fprintf(stderr, "error: bad grid spec '%s'\n", spec.c_str());
      std::exit(2);
    }
    for (double t = lo; t <= hi + 1e-12; t += step) grid.push_back(t);
    return grid;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) grid.push_back(std::atof(item.c_str()));
  }
  if (grid.empty()) {
    std::fprintf(stderr, "error: empty t grid\n");
    std::exit(2);
  }
  return grid;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> values;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::atoi(item.c_str()));
  }
  return values;
}

struct PmfHandle {
  trillt_pmf* ptr = nullptr;
  ~PmfHandle() { trillt_pmf_free(ptr); }
};

int run_pmf(int argc, char** argv, int n, double p, bool exact, bool force,
            std::uint64_t samples, std::uint64_t seed, int threads, const std::string& out) {
  if (exact && samples > 0) {
    std::fprintf(stderr, "error: choose either --exact or --samples\n");
    return 2;
  }
  if (!exact && samples == 0) {
    std::fprintf(stderr, "error: need --exact or --samples\n");
    return 2;
  }

  Manifest manifest(argc, argv);
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("mode", exact ? "exact" : "empirical");
  manifest.set_param("samples", samples);
  manifest.set_param("seed", seed);

  PmfHandle pmf;
  if (exact) {
    check(trillt_exact_pmf(n, p, force ? 1 : 0, &pmf.ptr));
  } else {
    check(trillt_empirical_pmf(n, p, seed, samples, threads, &pmf.ptr));
  }

  const std::string csv_path = out + ".csv";
  const std::string json_path = out + ".json";
  check(trillt_pmf_save_csv(pmf.ptr, csv_path.c_str()));
  check(trillt_pmf_save_json(pmf.ptr, json_path.c_str()));
  manifest.add_output(csv_path);
  manifest.add_output(json_path);
  manifest.write(out + ".manifest.json");

  double mean = 0, variance = 0;
  check(trillt_pmf_statistics(pmf.ptr, 0, &mean, &variance, nullptr));
  std::printf("pmf n=%d p=%g %s entries=%zu mean=%.10g variance=%.10g\n", n, p,
              exact ? "exact" : "empirical", trillt_pmf_size(pmf.ptr), mean, variance);
  std::printf("wrote %s %s\n", csv_path.c_str(), json_path.c_str());
  return 0;
}

struct LltRow {
  int n = 0;
  double sup = 0, argmax_x = 0, mc_error = 0;
  std::int64_t argmax_k = 0;
};

LltRow run_llt_single(int n, double p, bool exact, std::uint64_t samples, std::uint64_t seed,
                      int threads, const std::string& out, Manifest& manifest) {
  PmfHandle pmf;
  if (exact) {
    check(trillt_exact_pmf(n, p, 0, &pmf.ptr));
  } else {
    uint64_t min_samples = 0;
    check(trillt_minimum_llt_samples(n, p, &min_samples));
    if (samples < min_samples) {
      std::fprintf(stderr,
                   "error: %" PRIu64 " samples is underpowered for n=%d (need >= %" PRIu64 ")\n",
                   samples, n, min_samples);
      std::exit(4);
    }
    check(trillt_empirical_pmf(n, p, seed, samples, threads, &pmf.ptr));
  }

  trillt_discrepancy* rep = nullptr;
  check(trillt_sup_discrepancy(pmf.ptr, &rep));
  LltRow row;
  row.n = n;
  check(trillt_discrepancy_summary(rep, &row.sup, &row.argmax_k, &row.argmax_x, &row.mc_error));

  const std::string json_path = out + ".json";
  const std::string csv_path = out + ".csv";
  check(trillt_discrepancy_save_json(rep, json_path.c_str()));
  check(trillt_discrepancy_save_csv(rep, csv_path.c_str()));
  trillt_discrepancy_free(rep);
  manifest.add_output(json_path);
  manifest.add_output(csv_path);

  std::printf("llt n=%d p=%g samples=%" PRIu64 " sup=%.8g argmax_k=%" PRId64
              " argmax_x=%.6g mc_error_bound=%.4g\n",
              n, p, exact ? 0 : samples, row.sup, row.argmax_k, row.argmax_x, row.mc_error);
  return row;
}

int run_llt(int argc, char** argv, int n, const std::string& sweep, double p, bool exact,
            std::uint64_t samples, std::uint64_t seed, int threads, const std::string& out) {
  Manifest manifest(argc, argv);
  manifest.set_param("p", p);
  manifest.set_param("mode", exact ? "exact" : "empirical");
  manifest.set_param("samples", samples);
  manifest.set_param("seed", seed);

  if (!sweep.empty()) {
    const std::vector<int> ns = parse_int_list(sweep);
    if (ns.empty()) {
      std::fprintf(stderr, "error: empty sweep list\n");
      return 2;
    }
    manifest.set_param("sweep", ns);
    std::string lines;
    for (int nv : ns) {
      const LltRow row =
          run_llt_single(nv, p, exact, samples, seed, threads, out + ".n" + std::to_string(nv),
                         manifest);
      json j = {{"n", row.n},           {"sup_discrepancy", row.sup},
                {"argmax_k", row.argmax_k}, {"argmax_x", row.argmax_x},
                {"mc_error_bound", row.mc_error}};
      lines += j.dump();
      lines += '\n';
    }
    const std::string jsonl_path = out + ".jsonl";
    std::ofstream f(jsonl_path, std::ios::binary | std::ios::trunc);
    f << lines;
    f.close();
    manifest.add_output(jsonl_path);
    manifest.write(out + ".manifest.json");
    return 0;
  }

  manifest.set_param("n", n);
  run_llt_single(n, p, exact, samples, seed, threads, out, manifest);
  manifest.write(out + ".manifest.json");
  return 0;
}

int run_charfun(int argc, char** argv, int n, double p, bool exact, std::uint64_t samples,
                std::uint64_t seed, int threads, const std::string& grid_spec, double region_a,
                double decay_d, const std::string& decay_out, const std::string& out) {
  const std::vector<double> grid = parse_t_grid(grid_spec);

  Manifest manifest(argc, argv);
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("samples", samples);
  manifest.set_param("seed", seed);
  manifest.set_param("t_grid", grid_spec);
  manifest.set_param("region_boundary", region_a);
  manifest.set_param("decay_constant", decay_d);

  if (!exact && samples == 0) {
    std::fprintf(stderr, "error: need --samples (or --exact for n <= 7)\n");
    return 2;
  }

  trillt_charfun_profile* prof = nullptr;
  if (exact) {
    // exact profile: reuse the empirical path on the enumerated table
    PmfHandle pmf;
    check(trillt_exact_pmf(n, p, 0, &pmf.ptr));
    // evaluate through the pmf charfun, point by point
    // (the C surface exposes this via trillt_pmf_charfun)
    std::string csv = "t,re,im,abs,stderr,region\n";
    for (double t : grid) {
      double re = 0, im = 0;
      check(trillt_pmf_charfun(pmf.ptr, t, &re, &im));
      char line[160];
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,0,%s\n", t, re, im,
                    std::sqrt(re * re + im * im),
                    std::abs(t) < region_a ? "R1" : (std::abs(t) < std::pow(n, 0.55) ? "R2" : "R3"));
      csv += line;
    }
    const std::string csv_path = out + ".csv";
    std::ofstream f(csv_path, std::ios::binary | std::ios::trunc);
    f << csv;
    f.close();
    manifest.add_output(csv_path);
    manifest.write(out + ".manifest.json");
    std::printf("charfun n=%d p=%g exact grid=%zu -> %s\n", n, p, grid.size(), csv_path.c_str());
    return 0;
  }

  check(trillt_empirical_charfun(n, p, seed, samples, grid.data(), grid.size(), region_a,
                                 threads, &prof));
  const std::string csv_path = out + ".csv";
  check(trillt_profile_save_csv(prof, csv_path.c_str()));
  manifest.add_output(csv_path);

  // decay annotation needs enough samples for a meaningful noise floor
  std::string decay_note;
  if (samples >= 100000) {
    if (!decay_out.empty()) {
      check(trillt_profile_decay_csv(prof, decay_d, decay_out.c_str()));
      manifest.add_output(decay_out);
    }
    int32_t violations = 0, inconclusive = 0;
    check(trillt_profile_decay_violations(prof, decay_d, &violations, &inconclusive));
    decay_note = " decay_violations=" + std::to_string(violations) +
                 " inconclusive=" + std::to_string(inconclusive);
  } else if (!decay_out.empty()) {
    std::fprintf(stderr, "error: decay tables need at least 100000 samples\n");
    trillt_profile_free(prof);
    return 2;
  }
  trillt_profile_free(prof);
  manifest.write(out + ".manifest.json");
  std::printf("charfun n=%d p=%g samples=%" PRIu64 " grid=%zu%s -> %s\n", n, p, samples,
              grid.size(), decay_note.c_str(), csv_path.c_str());
  return 0;
}

int run_probe_decomposition(int argc, char** argv, int n, double p, int k,
                            std::uint64_t trials, std::uint64_t seed, int threads,
                            const std::string& out) {
  Manifest manifest(argc, argv);
  manifest.set_param("experiment", "decomposition");
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("k", k);
  manifest.set_param("trials", trials);
  manifest.set_param("seed", seed);

  trillt_probe_report* rep = nullptr;
  check(trillt_run_decomposition(n, p, k, seed, trials, threads, &rep));
  const std::string json_path = out + ".json";
  check(trillt_probe_report_save_json(rep, json_path.c_str()));
  manifest.add_output(json_path);
  manifest.write(out + ".manifest.json");

  double z_var = 0, z_bound = 0, bad = 0, y_min = 0;
  check(trillt_probe_report_field(rep, "z_var", &z_var));
  check(trillt_probe_report_field(rep, "z_var_bound", &z_bound));
  check(trillt_probe_report_field(rep, "bad_L_freq", &bad));
  check(trillt_probe_report_field(rep, "y_e_min", &y_min));
  trillt_probe_report_free(rep);
  std::printf("probe decomposition n=%d k=%d trials=%" PRIu64
              " z_var=%.6g bound=%.6g bad_L_freq=%.6g y_e_min=%g\n",
              n, k, trials, z_var, z_bound, bad, y_min);
  return 0;
}

int run_probe_hvector(int argc, char** argv, int n, double p, int u_size, std::uint64_t trials,
                      std::uint64_t seed, int threads, const std::string& coords_csv,
                      const std::string& out) {
  Manifest manifest(argc, argv);
  manifest.set_param("experiment", "hvector");
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("u_size", u_size);
  manifest.set_param("trials", trials);
  manifest.set_param("seed", seed);

  trillt_probe_report* rep = nullptr;
  check(trillt_run_hvector(n, p, u_size, seed, trials, threads, &rep));
  const std::string json_path = out + ".json";
  check(trillt_probe_report_save_json(rep, json_path.c_str()));
  manifest.add_output(json_path);
  if (!coords_csv.empty()) {
    check(trillt_probe_report_save_coords_csv(rep, coords_csv.c_str()));
    manifest.add_output(coords_csv);
  }
  manifest.write(out + ".manifest.json");

  double lambda = 0, global = 0, good = 0;
  check(trillt_probe_report_field(rep, "lambda_e_freq", &lambda));
  check(trillt_probe_report_field(rep, "lambda_global_freq", &global));
  check(trillt_probe_report_field(rep, "good_pair_freq", &good));
  trillt_probe_report_free(rep);
  std::printf("probe hvector n=%d u_size=%d trials=%" PRIu64
              " lambda_e_freq=%.6g lambda_global_freq=%.6g good_pair_freq=%.6g\n",
              n, u_size, trials, lambda, global, good);
  return 0;
}

int run_moments(int argc, char** argv, int n, double p, std::uint64_t samples, int k_max,
                std::uint64_t seed, int threads, const std::string& out) {
  Manifest manifest(argc, argv);
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("samples", samples);
  manifest.set_param("k_max", k_max);
  manifest.set_param("seed", seed);

  const std::string json_path = out + ".json";
  check(trillt_moment_report_save_json(n, p, seed, samples, k_max, threads, json_path.c_str()));
  manifest.add_output(json_path);
  manifest.write(out + ".manifest.json");

  std::vector<double> est(static_cast<std::size_t>(k_max)), err(static_cast<std::size_t>(k_max));
  check(trillt_empirical_moments(n, p, seed, samples, k_max, threads, est.data(), err.data()));
  std::printf("moments n=%d p=%g samples=%" PRIu64 ":", n, p, samples);
  for (int k = 1; k <= k_max; ++k) {
    std::printf(" m%d=%.5g(+-%.2g)", k, est[static_cast<std::size_t>(k) - 1],
                err[static_cast<std::size_t>(k) - 1]);
  }
  std::printf("\n");
  return 0;
}

int run_graph(int argc, char** argv, int n, double p, std::uint64_t seed,
              std::uint64_t sample_index, const std::string& out) {
  Manifest manifest(argc, argv);
  manifest.set_param("n", n);
  manifest.set_param("p", p);
  manifest.set_param("seed", seed);
  manifest.set_param("sample_index", sample_index);

  trillt_graph* g = nullptr;
  check(trillt_graph_sample(n, p, seed, sample_index, &g));
  check(trillt_graph_dump(g, out.c_str()));
  manifest.add_output(out);
  manifest.write(out + ".manifest.json");

  int64_t edges = 0, triangles = 0;
  check(trillt_graph_edge_count(g, &edges));
  check(trillt_graph_triangles(g, &triangles));
  trillt_graph_free(g);
  std::printf("graph n=%d p=%g edges=%" PRId64 " triangles=%" PRId64 " -> %s\n", n, p, edges,
              triangles, out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trillt: triangle-count local limit experiments on G(n,p)"};
  app.require_subcommand(1);

  int threads = default_threads();
  app.add_option("--threads", threads, "worker thread count (env TRILLT_THREADS)")
      ->check(CLI::PositiveNumber);

  // pmf
  auto* pmf_cmd = app.add_subcommand("pmf", "triangle-count pmf, exact or sampled");
  int pmf_n = 0;
  double pmf_p = 0.5;
  bool pmf_exact = false, pmf_force = false;
  std::uint64_t pmf_samples = 0, pmf_seed = 1;
  std::string pmf_out = "pmf";
  pmf_cmd->add_option("--n", pmf_n, "vertex count")->required();
  pmf_cmd->add_option("--p", pmf_p, "edge probability");
  pmf_cmd->add_flag("--exact", pmf_exact, "exhaustive enumeration (n <= 7)");
  pmf_cmd->add_flag("--force", pmf_force, "override the n <= 7 cost guard (up to n = 8)");
  pmf_cmd->add_option("--samples", pmf_samples, "Monte Carlo sample count");
  pmf_cmd->add_option("--seed", pmf_seed, "reproducibility seed");
  pmf_cmd->add_option("--out,-o", pmf_out, "output path base");

  // llt
  auto* llt_cmd = app.add_subcommand("llt", "sup discrepancy against the discrete Gaussian");
  int llt_n = 0;
  std::string llt_sweep;
  double llt_p = 0.5;
  bool llt_exact = false;
  std::uint64_t llt_samples = 0, llt_seed = 1;
  std::string llt_out = "llt";
  llt_cmd->add_option("--n", llt_n, "vertex count");
  llt_cmd->add_option("--sweep", llt_sweep, "comma list of n values, one report per n");
  llt_cmd->add_option("--p", llt_p, "edge probability");
  llt_cmd->add_flag("--exact", llt_exact, "use the exact pmf (n <= 7)");
  llt_cmd->add_option("--samples", llt_samples, "Monte Carlo sample count");
  llt_cmd->add_option("--seed", llt_seed, "reproducibility seed");
  llt_cmd->add_option("--out,-o", llt_out, "output path base");

  // charfun
  auto* cf_cmd = app.add_subcommand("charfun", "characteristic function profile on a t grid");
  int cf_n = 0;
  double cf_p = 0.5, cf_a = 3.0, cf_d = 10.0;
  bool cf_exact = false;
  std::uint64_t cf_samples = 0, cf_seed = 1;
  std::string cf_grid = "0:3:0.1", cf_out = "charfun", cf_decay_out;
  cf_cmd->add_option("--n", cf_n, "vertex count")->required();
  cf_cmd->add_option("--p", cf_p, "edge probability");
  cf_cmd->add_flag("--exact", cf_exact, "evaluate from the exact pmf (n <= 7)");
  cf_cmd->add_option("--samples", cf_samples, "Monte Carlo sample count");
  cf_cmd->add_option("--seed", cf_seed, "reproducibility seed");
  cf_cmd->add_option("--tgrid", cf_grid, "t grid: a:b:step, log:a:b:count, or t1,t2,...");
  cf_cmd->add_option("--A", cf_a, "R1/R2 region boundary");
  cf_cmd->add_option("--D", cf_d, "decay envelope constant");
  cf_cmd->add_option("--decay-out", cf_decay_out, "also write a decay table CSV here");
  cf_cmd->add_option("--out,-o", cf_out, "output path base");

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "conditioning experiments");
  probe_cmd->require_subcommand(1);
  auto* dec_cmd = probe_cmd->add_subcommand("decomposition", "union-of-matchings triangle split");
  int dec_n = 0, dec_k = 1;
  double dec_p = 0.5;
  std::uint64_t dec_trials = 1000, dec_seed = 1;
  std::string dec_out = "probe_decomposition";
  dec_cmd->add_option("--n", dec_n, "vertex count (even)")->required();
  dec_cmd->add_option("--k", dec_k, "number of disjoint perfect matchings");
  dec_cmd->add_option("--p", dec_p, "edge probability");
  dec_cmd->add_option("--trials", dec_trials, "trial count");
  dec_cmd->add_option("--seed", dec_seed, "reproducibility seed");
  dec_cmd->add_option("--out,-o", dec_out, "output path base");

  auto* hv_cmd = probe_cmd->add_subcommand("hvector", "two-sided exposure pair differences");
  int hv_n = 0, hv_usize = 1;
  double hv_p = 0.5;
  std::uint64_t hv_trials = 1000, hv_seed = 1;
  std::string hv_out = "probe_hvector", hv_coords;
  hv_cmd->add_option("--n", hv_n, "vertex count")->required();
  hv_cmd->add_option("--usize", hv_usize, "size of the exposed side U");
  hv_cmd->add_option("--p", hv_p, "edge probability");
  hv_cmd->add_option("--trials", hv_trials, "trial count");
  hv_cmd->add_option("--seed", hv_seed, "reproducibility seed");
  hv_cmd->add_option("--coords-csv", hv_coords, "per-coordinate statistics CSV path");
  hv_cmd->add_option("--out,-o", hv_out, "output path base");

  // moments
  auto* mom_cmd = app.add_subcommand("moments", "empirical moments of the standardized count");
  int mom_n = 0, mom_kmax = 4;
  double mom_p = 0.5;
  std::uint64_t mom_samples = 100000, mom_seed = 1;
  std::string mom_out = "moments";
  mom_cmd->add_option("--n", mom_n, "vertex count")->required();
  mom_cmd->add_option("--p", mom_p, "edge probability");
  mom_cmd->add_option("--samples", mom_samples, "Monte Carlo sample count");
  mom_cmd->add_option("--kmax", mom_kmax, "highest moment order (<= 8)");
  mom_cmd->add_option("--seed", mom_seed, "reproducibility seed");
  mom_cmd->add_option("--out,-o", mom_out, "output path base");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "dump one sampled graph (debug fixtures)");
  int g_n = 0;
  double g_p = 0.5;
  std::uint64_t g_seed = 1, g_index = 0;
  std::string g_out = "graph.txt";
  graph_cmd->add_option("--n", g_n, "vertex count")->required();
  graph_cmd->add_option("--p", g_p, "edge probability");
  graph_cmd->add_option("--seed", g_seed, "reproducibility seed");
  graph_cmd->add_option("--sample-index", g_index, "sample index within the seed stream");
  graph_cmd->add_option("--out,-o", g_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (pmf_cmd->parsed()) {
    return run_pmf(argc, argv, pmf_n, pmf_p, pmf_exact, pmf_force, pmf_samples, pmf_seed,
                   threads, pmf_out);
  }
  if (llt_cmd->parsed()) {
    if (llt_sweep.empty() && llt_n <= 0) {
      std::fprintf(stderr, "error: need --n or --sweep\n");
      return 2;
    }
    return run_llt(argc, argv, llt_n, llt_sweep, llt_p, llt_exact, llt_samples, llt_seed,
                   threads, llt_out);
  }
  if (cf_cmd->parsed()) {
    return run_charfun(argc, argv, cf_n, cf_p, cf_exact, cf_samples, cf_seed, threads, cf_grid,
                       cf_a, cf_d, cf_decay_out, cf_out);
  }
  if (dec_cmd->parsed()) {
    return run_probe_decomposition(argc, argv, dec_n, dec_p, dec_k, dec_trials, dec_seed,
                                   threads, dec_out);
  }
  if (hv_cmd->parsed()) {
    return run_probe_hvector(argc, argv, hv_n, hv_p, hv_usize, hv_trials, hv_seed, threads,
                             hv_coords, hv_out);
  }
  if (mom_cmd->parsed()) {
    return run_moments(argc, argv, mom_n, mom_p, mom_samples, mom_kmax, mom_seed, threads,
                       mom_out);
  }
  if (graph_cmd->parsed()) {
    return run_graph(argc, argv, g_n, g_p, g_seed, g_index, g_out);
  }
  return 2;
}
