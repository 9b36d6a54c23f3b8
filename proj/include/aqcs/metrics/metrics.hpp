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

#include <optional>
#include <string>
#include <vector>

#include "aqcs/core/dense.hpp"
#include "aqcs/engine/runs.hpp"
#include "aqcs/protocols/pdd.hpp"

namespace aqcs {

inline constexpr double kVerdictSlack = 1e-9;

/// Half the trace norm of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const StateVector& a, const StateVector& b);

struct PhiBudget {
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double total = 0.0;
  /// term3 <= J T.
  bool third_term_valid = true;
  /// J T_c < pi.
  bool magnus_convergent = true;
};

/// term1 = alpha (JT)^2 / (L/K), term2 = J T w / (tau + w),
/// term3 = J T ((e^{2 beta T_c} - 1) / (2 beta T_c) - 1), T_c = K (tau + w).
PhiBudget phi_budget(double coupling_strength, double total_time, double width, double tau, std::size_t k_order,
                     std::size_t total_pulses, double beta, double alpha);

/// Smallest alpha >= 0 with term1 + term2 >= phi, so that the first term
/// alone covers the ideal-pulse residual. The budget with this alpha covers
/// phi whatever term3 is.
double calibrate_alpha(double phi, double coupling_strength, double total_time, double width, double tau,
                       std::size_t k_order, std::size_t total_pulses, double beta);

struct ErrorPrediction {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double total = 0.0;
};

/// (J/delta0)^2 n^-eps1 + n^-eps2 + (J/delta0) n^(1 - eps1).
ErrorPrediction dd_error_prediction(const ScalingRule& rule, double n);

struct Verdict {
  std::string name;
  /// False when the bound does not apply (e.g. Phi > 1).
  bool checked = true;
  bool passed = true;
  /// rhs - lhs; negative means the bound is violated.
  double slack = 0.0;
};

struct RunParameters {
  std::size_t n = 0;
  double coupling_strength = 0.0;
  double tau = 0.0;
  double width = 0.0;
  std::size_t k_order = 0;
  std::size_t total_pulses = 0;
  double total_time = 0.0;
  double beta = 0.0;
  double alpha = 1.0;
};

RunParameters run_parameters(const PulseSchedule& schedule, const SystemBathSpec& bath, double beta,
                             double alpha = 1.0);

struct ErrorReport {
  RunParameters parameters;
  double delta_ad = 0.0;
  double d_D = 0.0;
  double delta_S = 0.0;
  double d_tot = 0.0;
  /// Joint-level D[rho^0(T), ideal x rho_B^0(T)]; equals delta_ad up to roundoff.
  double d_ad_joint = 0.0;
  double phi = 0.0;
  double phi_uncoupled = 0.0;
  PhiBudget budget;
  double alpha_required = 0.0;
  std::optional<ErrorPrediction> prediction;
  std::vector<Verdict> verdicts;
  RunDiagnostics diagnostics;

  double slack_eq3() const;
  /// NaN when Phi > 1.
  double slack_eq5() const;
  bool all_passed() const;
  const Verdict& verdict(const std::string& name) const;
};

/// Distances, Phi and the four verdicts: monotonicity, triangle,
/// eq3 (delta_S <= d_D + delta_ad) and eq5 (d_D <= (e^Phi - 1)/2 when Phi <= 1).
ErrorReport error_report(const ProtectedRun& run, const RunParameters& parameters);

std::string csv_header();
std::string csv_row(const ErrorReport& report);
/// Stable JSON object, keys in a fixed order.
std::string to_json(const ErrorReport& report);

}  // namespace aqcs
