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

#include "core/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trillt::io {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string pmf_to_csv(const PmfTable& pmf) {
  std::string out = "k,prob\n";
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    out += std::to_string(pmf.support[i]);
    out += ',';
    out += format_double(pmf.probs[i]);
    out += '\n';
  }
  return out;
}

std::string pmf_to_json(const PmfTable& pmf) {
  json j;
  j["kind"] = pmf.kind == PmfKind::exact ? "exact" : "empirical";
  j["n"] = pmf.n;
  j["p"] = pmf.p;
  j["sample_count"] = pmf.sample_count;
  j["support"] = pmf.support;
  j["probs"] = pmf.probs;
  if (pmf.kind == PmfKind::empirical) j["counts"] = pmf.counts;
  return j.dump(2) + "\n";
}

std::string profile_to_csv(const CharFunProfile& profile) {
  std::string out = "t,re,im,abs,stderr,region\n";
  for (std::size_t i = 0; i < profile.t_values.size(); ++i) {
    out += format_double(profile.t_values[i]);
    out += ',';
    out += format_double(profile.estimates[i].real());
    out += ',';
    out += format_double(profile.estimates[i].imag());
    out += ',';
    out += format_double(std::abs(profile.estimates[i]));
    out += ',';
    out += format_double(profile.std_errors[i]);
    out += ',';
    out += region_name(profile.regions[i]);
    out += '\n';
  }
  return out;
}

std::string decay_to_csv(const std::vector<DecayRow>& rows) {
  std::string out = "t,region,abs_psi,stderr,bound,gauss_gap,status\n";
  for (const DecayRow& row : rows) {
    out += format_double(row.t);
    out += ',';
    out += region_name(row.region);
    out += ',';
    out += format_double(row.abs_psi);
    out += ',';
    out += format_double(row.std_error);
    out += ',';
    out += format_double(row.bound);
    out += ',';
    out += format_double(row.gauss_gap);
    out += ',';
    out += decay_status_name(row.status);
    out += '\n';
  }
  return out;
}

std::string discrepancy_to_json(const DiscrepancyReport& report) {
  json j;
  j["n"] = report.n;
  j["p"] = report.p;
  j["kind"] = report.kind == PmfKind::exact ? "exact" : "empirical";
  j["sample_count"] = report.sample_count;
  j["sup_discrepancy"] = report.sup_discrepancy;
  j["argmax_k"] = report.argmax_k;
  j["argmax_x"] = report.argmax_x;
  j["mc_error_bound"] = report.mc_error_bound;
  json points = json::array();
  for (const DiscrepancyPoint& pt : report.per_point) {
    points.push_back({{"k", pt.k},
                      {"x", pt.x},
                      {"scaled_empirical", pt.scaled_empirical},
                      {"gaussian", pt.gaussian},
                      {"gap", pt.gap}});
  }
  j["per_point"] = std::move(points);
  return j.dump(2) + "\n";
}

std::string discrepancy_to_csv(const DiscrepancyReport& report) {
  std::string out = "x,gap\n";
  for (const DiscrepancyPoint& pt : report.per_point) {
    out += format_double(pt.x);
    out += ',';
    out += format_double(pt.gap);
    out += '\n';
  }
  return out;
}

std::string probe_report_to_json(const ProbeReport& report) {
  json j;
  j["experiment"] = report.experiment;
  j["n"] = report.n;
  j["p"] = report.p;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  if (report.experiment == "decomposition") {
    j["k"] = report.k;
    j["c0_total"] = report.totals.c0;
    j["c1_total"] = report.totals.c1;
    j["c2_total"] = report.totals.c2;
    j["c3_total"] = report.totals.c3;
    j["y_e_min"] = report.y_e_min;
    j["y_e_mean"] = report.y_e_mean;
    j["bad_L_freq"] = report.bad_L_freq;
    j["z_mean"] = report.z_mean;
    j["z_var"] = report.z_var;
    j["z_var_bound"] = report.z_var_bound;
    j["y_e_means"] = report.y_e_means;
    j["y_e_path_counts"] = report.y_e_path_counts;
  } else {
    j["u_size"] = report.u_size;
    j["h_coord_mean"] = report.h_coord_mean;
    j["h_coord_variance"] = report.h_coord_variance;
    j["h_band_fraction"] = report.h_band_fraction;
    j["lambda_e_freq"] = report.lambda_e_freq;
    j["lambda_global_freq"] = report.lambda_global_freq;
    j["good_pair_freq"] = report.good_pair_freq;
    j["band_lo"] = report.band_lo;
    j["band_hi"] = report.band_hi;
  }
  return j.dump(2) + "\n";
}

std::string probe_coords_to_csv(const ProbeReport& report) {
  std::string out = "coord,mean,variance\n";
  for (std::size_t e = 0; e < report.h_coord_means.size(); ++e) {
    out += std::to_string(e);
    out += ',';
    out += format_double(report.h_coord_means[e]);
    out += ',';
    out += format_double(report.h_coord_vars[e]);
    out += '\n';
  }
  return out;
}

std::string moment_report_to_json(const MomentReport& report) {
  json j;
  j["n"] = report.n;
  j["p"] = report.p;
  j["mean"] = report.mean;
  j["variance"] = report.variance;
  j["sample_count"] = report.sample_count;
  json emp = json::object();
  json err = json::object();
  json pred = json::object();
  for (int k = 1; k <= report.empirical.k_max; ++k) {
    const auto key = std::to_string(k);
    emp[key] = report.empirical.estimates[static_cast<std::size_t>(k) - 1];
    err[key] = report.empirical.std_errors[static_cast<std::size_t>(k) - 1];
    pred[key] = report.predicted[static_cast<std::size_t>(k) - 1];
  }
  j["empirical_moments"] = std::move(emp);
  j["empirical_std_errors"] = std::move(err);
  j["predicted_moments"] = std::move(pred);
  return j.dump(2) + "\n";
}

std::string mod_q_to_json(const ModQResult& result, int n, double p) {
  json j;
  j["n"] = n;
  j["p"] = p;
  j["q"] = result.q;
  j["sample_count"] = result.sample_count;
  j["freqs"] = result.freqs;
  j["max_dev"] = result.max_dev;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_io("cannot open for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw_io("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string digest_file(const std::string& path) { return digest_hex(read_file(path)); }

}  // namespace trillt::io
