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

#include "aqcs/model/spectrum.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <stdexcept>

namespace aqcs {

Eigen::VectorXd restricted_eigenvalues(const Operator& h, const Operator& subspace) {
  if (subspace.size() == 0) {
    Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }
  const Operator reduced = hermitian_part(subspace.adjoint() * h * subspace);
  Eigen::SelfAdjointEigenSolver<Operator> es(reduced, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

SpectralReport min_gap(const AdiabaticSpec& spec, std::size_t grid_points, bool refine) {
  if (grid_points < 2) throw std::invalid_argument("min_gap: need at least 2 grid points");
  const AdiabaticHamiltonian ham(spec);
  auto gap_at = [&](double s) {
    const auto e = restricted_eigenvalues(ham.at(s), spec.subspace);
    if (e.size() < 2) throw std::invalid_argument("min_gap: space has a single level, no gap is defined");
    return e(1) - e(0);
  };

  SpectralReport report;
  std::size_t best = 0;
  double best_gap = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const auto e = restricted_eigenvalues(ham.at(s), spec.subspace);
    if (e.size() < 2) throw std::invalid_argument("min_gap: space has a single level, no gap is defined");
    report.s.push_back(s);
    report.energies.emplace_back(e.data(), e.data() + e.size());
    const double g = e(1) - e(0);
    if (i == 0 || g < best_gap) {
      best_gap = g;
      best = i;
    }
  }
  report.min_gap = best_gap;
  report.argmin = report.s[best];

  if (refine) {
    const double lo = report.s[best == 0 ? 0 : best - 1];
    const double hi = report.s[std::min(best + 1, grid_points - 1)];
    // 26 bits of precision puts the bracket width near 1e-8.
    const auto [s_star, g_star] = boost::math::tools::brent_find_minima(gap_at, lo, hi, 26);
    if (g_star < report.min_gap) {
      report.min_gap = g_star;
      report.argmin = s_star;
    }
  }
  if (report.min_gap < kDegeneracyTolerance) {
    report.degenerate = true;
    report.min_gap = 0.0;
  }
  return report;
}

std::string to_csv(const SpectralReport& report) {
  std::string out = "s";
  const std::size_t levels = report.energies.empty() ? 0 : report.energies.front().size();
  for (std::size_t l = 0; l < levels; ++l) out += fmt::format(",E{}", l);
  out += ",gap\n";
  for (std::size_t i = 0; i < report.s.size(); ++i) {
    out += fmt::format("{:.17g}", report.s[i]);
    for (double e : report.energies[i]) out += fmt::format(",{:.17g}", e);
    out += fmt::format(",{:.17g}\n", report.energies[i][1] - report.energies[i][0]);
  }
  return out;
}

}  // namespace aqcs
