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

#include <cstdint>
#include <string>

#include "core/limitlaw.hpp"
#include "core/moments.hpp"
#include "core/oracle.hpp"
#include "core/probe.hpp"
#include "core/spectral.hpp"

namespace trillt::io {

// All writers emit byte-stable output for equal inputs: fixed "%.17g" floats
// in CSV, alphabetically ordered keys in JSON.

std::string pmf_to_csv(const PmfTable& pmf);
std::string pmf_to_json(const PmfTable& pmf);

std::string profile_to_csv(const CharFunProfile& profile);
std::string decay_to_csv(const std::vector<DecayRow>& rows);

std::string discrepancy_to_json(const DiscrepancyReport& report);
std::string discrepancy_to_csv(const DiscrepancyReport& report);  // columns x, gap

std::string probe_report_to_json(const ProbeReport& report);
std::string probe_coords_to_csv(const ProbeReport& report);

std::string moment_report_to_json(const MomentReport& report);

std::string mod_q_to_json(const ModQResult& result, int n, double p);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// FNV-1a 64-bit digest, hex encoded; the manifest integrity check.
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);
std::string digest_file(const std::string& path);

std::string format_double(double x);  // shortest stable "%.17g"

}  // namespace trillt::io
