// Copyright 2026 The AQC Shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "aqcs/model/hamiltonians.hpp"

namespace aqcs {

/// Gaps below this are treated as a degenerate ground level.
inline constexpr double kDegeneracyTolerance = 1e-12;

/// Ascending eigenvalues of h, restricted to the column space of
/// `subspace` when it is non-empty.
Eigen::VectorXd restricted_eigenvalues(const Operator& h, const Operator& subspace);

struct SpectralReport {
  std::vector<double> s;
  /// energies[i] holds the ascending spectrum at s[i].
  std::vector<std::vector<double>> energies;
  /// Minimum of E_1(s) - E_0(s), 0 when degenerate.
  double min_gap = 0.0;
  double argmin = 0.0;
  bool degenerate = false;
};

/// Spectrum of H_ad on a uniform grid of `grid_points` >= 2 values of s,
/// with optional Brent refinement of the gap minimum between the grid
/// neighbours of the coarse minimum (tolerance ~1e-8 in s).
SpectralReport min_gap(const AdiabaticSpec& spec, std::size_t grid_points, bool refine);

/// "s,E0,E1,...,gap" header plus one row per grid point.
std::string to_csv(const SpectralReport& report);

}  // namespace aqcs
