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

#include "core/error.hpp"

namespace trillt {

/// Shifted lattice {(k - shift)/scale : k in Z} carrying the standardized
/// triangle count. Consecutive points differ by exactly 1/scale.
struct LatticeSpec {
  double shift = 0.0;  // p^3 C(n,3)
  double scale = 1.0;  // sigma_n

  double point(std::int64_t k) const noexcept {
    return (static_cast<double>(k) - shift) / scale;
  }

  bool contains(double y, double tol = 1e-9) const noexcept {
    const double k = y * scale + shift;
    return std::abs(k - std::round(k)) < tol;
  }

  static LatticeSpec for_graph(int n, double p);
};

}  // namespace trillt
