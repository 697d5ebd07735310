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

// Drives the installed binary end to end: exit codes, file outputs, rerun
// byte-identity, manifest digests.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef TRILLT_CLI_PATH
#error "TRILLT_CLI_PATH must point at the trillt binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRILLT_CLI_PATH) + " " + args + " 2>&1";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[512];
  while (std::fgets(buf, sizeof(buf), pipe)) result.output += buf;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/trillt_cli_XXXXXX";
    const char* made = mkdtemp(tmpl);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

}  // namespace

TEST_CASE("exact pmf command") {
  const std::string out = scratch_dir() + "/pmf5";
  const RunResult run = run_cli("pmf --n 5 --p 0.5 --exact --out " + out);
  CHECK(run.exit_code == 0);

  const std::string csv = slurp(out + ".csv");
  CHECK(csv.rfind("k,prob\n", 0) == 0);

  // manifest digests match the files on disk
  const nlohmann::json manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
  CHECK(manifest["artifact_version"] == "0.1.0");
  for (const auto& entry : manifest["outputs"]) {
    const std::string path = entry["path"].get<std::string>();
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(slurp(path))));
    CHECK(entry["digest_fnv1a64"].get<std::string>() == hex);
  }
}

TEST_CASE("pmf guards") {
  CHECK(run_cli("pmf --n 9 --exact --out " + scratch_dir() + "/bad").exit_code == 2);
  CHECK(run_cli("pmf --n 5 --out " + scratch_dir() + "/bad2").exit_code == 2);
  CHECK(run_cli("pmf --n 5 --exact --samples 10 --out " + scratch_dir() + "/bad3").exit_code ==
        2);
  // force opens up n = 8
  CHECK(run_cli("pmf --n 8 --exact --force --out " + scratch_dir() + "/pmf8").exit_code == 0);
}

TEST_CASE("sampled pmf reruns are byte-identical across thread counts") {
  const std::string out1 = scratch_dir() + "/mc1";
  const std::string out2 = scratch_dir() + "/mc2";
  const std::string out3 = scratch_dir() + "/mc3";
  CHECK(run_cli("pmf --n 40 --p 0.5 --samples 60000 --seed 1 --out " + out1).exit_code == 0);
  CHECK(run_cli("pmf --n 40 --p 0.5 --samples 60000 --seed 1 --out " + out2).exit_code == 0);
  CHECK(run_cli("--threads 3 pmf --n 40 --p 0.5 --samples 60000 --seed 1 --out " + out3)
            .exit_code == 0);
  const std::string bytes = slurp(out1 + ".csv");
  CHECK(bytes == slurp(out2 + ".csv"));
  CHECK(bytes == slurp(out3 + ".csv"));
  CHECK(slurp(out1 + ".json") == slurp(out3 + ".json"));

  // different seed, different bytes
  const std::string other = scratch_dir() + "/mc_other";
  CHECK(run_cli("pmf --n 40 --p 0.5 --samples 60000 --seed 2 --out " + other).exit_code == 0);
  CHECK(bytes != slurp(other + ".csv"));
}

TEST_CASE("llt command") {
  const std::string out = scratch_dir() + "/llt6";
  const RunResult run = run_cli("llt --n 6 --p 0.5 --exact --out " + out);
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("sup=") != std::string::npos);

  const nlohmann::json rep = nlohmann::json::parse(slurp(out + ".json"));
  CHECK(rep["n"] == 6);
  CHECK(std::abs(rep["sup_discrepancy"].get<double>() - 0.1814993512622792) < 1e-12);

  const std::string csv = slurp(out + ".csv");
  CHECK(csv.rfind("x,gap\n", 0) == 0);

  // underpowered refusal
  CHECK(run_cli("llt --n 30 --p 0.5 --samples 100 --out " + scratch_dir() + "/thin").exit_code ==
        4);
}

TEST_CASE("llt sweep writes one row per n") {
  const std::string out = scratch_dir() + "/sweep";
  const RunResult run = run_cli("llt --sweep 20,24 --p 0.5 --samples 20000 --seed 3 --out " + out);
  CHECK(run.exit_code == 0);
  std::istringstream lines(slurp(out + ".jsonl"));
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json row = nlohmann::json::parse(line);
    CHECK(row.contains("sup_discrepancy"));
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("charfun command") {
  const std::string out = scratch_dir() + "/cf";
  const RunResult run =
      run_cli("charfun --n 30 --p 0.5 --samples 20000 --tgrid 0,1,6.5 --seed 2 --out " + out);
  CHECK(run.exit_code == 0);
  std::istringstream csv(slurp(out + ".csv"));
  std::string header, row0, row1, row2;
  std::getline(csv, header);
  std::getline(csv, row0);
  std::getline(csv, row1);
  std::getline(csv, row2);
  CHECK(header == "t,re,im,abs,stderr,region");
  CHECK(row0.substr(0, 4) == "0,1,");             // psi(0) = 1 exactly
  CHECK(row0.find("R1") != std::string::npos);
  CHECK(row1.find("R1") != std::string::npos);
  CHECK(row2.find("R3") != std::string::npos);    // 6.5 > 30^0.55

  // region boundary crossing t = n^0.55 for n=30 sits in (6.49, 6.50)
  const std::string out2 = scratch_dir() + "/cf2";
  CHECK(run_cli("charfun --n 30 --samples 20000 --tgrid 6.49,6.50 --out " + out2).exit_code ==
        0);
  const std::string grid = slurp(out2 + ".csv");
  CHECK(grid.find("6.4900000000000002,") != std::string::npos);
  CHECK(grid.find(",R2") != std::string::npos);
  CHECK(grid.find(",R3") != std::string::npos);

  // exact profile for a small n
  const std::string out3 = scratch_dir() + "/cf_exact";
  CHECK(run_cli("charfun --n 6 --exact --tgrid 0:2:0.5 --out " + out3).exit_code == 0);

  // decay table needs enough samples
  CHECK(run_cli("charfun --n 30 --samples 1000 --tgrid 0:2:1 --decay-out " + scratch_dir() +
                "/decay.csv --out " + scratch_dir() + "/cf3")
            .exit_code == 2);
}

TEST_CASE("probe commands") {
  const std::string dec = scratch_dir() + "/dec";
  const RunResult run =
      run_cli("probe decomposition --n 16 --k 2 --trials 300 --seed 5 --out " + dec);
  CHECK(run.exit_code == 0);
  const nlohmann::json rep = nlohmann::json::parse(slurp(dec + ".json"));
  CHECK(rep["experiment"] == "decomposition");
  CHECK(rep["z_var_bound"].get<double>() == doctest::Approx(6.0 * 16 * 8));
  CHECK(rep["c3_total"] == 0);

  CHECK(run_cli("probe decomposition --n 7 --k 1 --trials 10 --out " + scratch_dir() + "/odd")
            .exit_code == 2);

  const std::string hv = scratch_dir() + "/hv";
  CHECK(run_cli("probe hvector --n 20 --usize 10 --trials 100 --seed 5 --coords-csv " + hv +
                "_coords.csv --out " + hv)
            .exit_code == 0);
  const nlohmann::json hv_rep = nlohmann::json::parse(slurp(hv + ".json"));
  CHECK(hv_rep["experiment"] == "hvector");
  CHECK(hv_rep["u_size"] == 10);
  const std::string coords = slurp(hv + "_coords.csv");
  CHECK(coords.rfind("coord,mean,variance\n", 0) == 0);
}

TEST_CASE("moments and graph commands") {
  const std::string mom = scratch_dir() + "/mom";
  CHECK(run_cli("moments --n 20 --samples 5000 --kmax 4 --seed 9 --out " + mom).exit_code == 0);
  const nlohmann::json rep = nlohmann::json::parse(slurp(mom + ".json"));
  CHECK(rep["predicted_moments"]["2"] == 1.0);
  CHECK(rep["predicted_moments"]["4"] == 3.0);

  const std::string g1 = scratch_dir() + "/g1.txt";
  const std::string g2 = scratch_dir() + "/g2.txt";
  CHECK(run_cli("graph --n 12 --p 0.5 --seed 4 --sample-index 2 --out " + g1).exit_code == 0);
  CHECK(run_cli("graph --n 12 --p 0.5 --seed 4 --sample-index 2 --out " + g2).exit_code == 0);
  CHECK(slurp(g1) == slurp(g2));
}

TEST_CASE("unknown flags fail with the parameter exit code") {
  CHECK(run_cli("pmf --n 5 --exact --frobnicate --out /tmp/x").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}
