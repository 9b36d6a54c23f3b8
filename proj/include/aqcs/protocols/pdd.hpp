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

#include <stdexcept>
#include <string>
#include <vector>

#include "aqcs/codes/codes.hpp"
#include "aqcs/core/dense.hpp"

namespace aqcs {

/// Raised for schedules that are well formed but physically suspect, such
/// as pulses at least as wide as the free interval.
class ScheduleWarning : public std::invalid_argument {
 public:
  explicit ScheduleWarning(const std::string& what) : std::invalid_argument(what) {}
};

/// Hermitian H with e^{-i w H} = p exactly: H = (pi / 2w)(I - p).
/// Requires w > 0 and p^2 = I (phase +1 or -1).
Operator pulse_generator(const PauliString& p, double width);

/// Periodic decoupling: each slot is a free interval tau followed by a
/// pulse window w, slot k of a cycle ending with pulse P_k, where
/// G_k = P_{K-1} ... P_k. Slot boundaries are t_k = k (tau + w).
class PulseSchedule {
 public:
  PulseSchedule(DecouplingGroup group, double tau, double width, std::size_t cycles);

  const DecouplingGroup& group() const { return group_; }
  std::size_t pulses_per_cycle() const { return group_.order(); }
  double tau() const { return tau_; }
  double width() const { return width_; }
  std::size_t cycles() const { return cycles_; }
  /// L, the total number of pulses.
  std::size_t total_pulses() const { return cycles_ * group_.order(); }
  double slot_duration() const { return tau_ + width_; }
  double cycle_time() const { return static_cast<double>(group_.order()) * slot_duration(); }
  /// T = L (tau + w).
  double total_time() const { return static_cast<double>(total_pulses()) * slot_duration(); }
  bool ideal() const { return width_ == 0.0; }

  /// P_k with phase +1, k in [0, K).
  const std::vector<PauliString>& pulses() const { return pulses_; }
  /// H_DD^(k). Empty for ideal schedules.
  const std::vector<Operator>& generators() const { return generators_; }

  /// Global slot index containing t, clamped to [0, L).
  std::size_t slot_at(double t) const;
  /// True when t lies in the pulse window [t_{k+1} - w, t_{k+1}).
  bool in_pulse_window(double t) const;

 private:
  DecouplingGroup group_;
  double tau_;
  double width_;
  std::size_t cycles_;
  std::vector<PauliString> pulses_;
  std::vector<Operator> generators_;
};

/// Throws std::invalid_argument for tau <= 0, w < 0 or cycles == 0, and
/// ScheduleWarning for w >= tau.
PulseSchedule pdd_schedule(const DecouplingGroup& group, double tau, double width, std::size_t cycles);

/// H_C(t): zero during free intervals, H_DD^(k) inside pulse windows.
/// Ideal schedules have H_C = 0 everywhere (pulses are instantaneous).
Operator control_hamiltonian(const PulseSchedule& schedule, double t);

struct ScheduleSummary {
  std::size_t pulses_per_cycle = 0;
  double tau = 0.0;
  double width = 0.0;
  std::size_t total_pulses = 0;
  double total_time = 0.0;
  double cycle_time = 0.0;
  double j_cycle_time = 0.0;
  /// J T_c < pi, the sufficient condition for per-cycle Magnus convergence.
  bool magnus_convergent = false;
};

ScheduleSummary summarize(const PulseSchedule& schedule, double coupling_strength);
std::string to_text(const ScheduleSummary& summary);

/// Which adiabatic theorem sets the runtime exponent:
/// twice_differentiable gives zeta = 3z + 2, smooth gives zeta = 2z + 1.
enum class AdiabaticRegime { twice_differentiable, smooth };

double runtime_exponent(double z, AdiabaticRegime regime);

struct ScalingRule {
  double zeta = 1.0;
  double z = 0.0;
  double eps1 = 1.5;
  double eps2 = 0.5;
  double delta0 = 1.0;
  double coupling_strength = 1.0;
  /// O(1) constant of the first term of the error-phase budget.
  double alpha = 1.0;
  /// Prefactors of the tau and w power laws.
  double c_tau = 1.0;
  double c_w = 1.0;

  /// Rule with zeta derived from z for the given regime.
  static ScalingRule from_critical_exponent(double z, AdiabaticRegime regime, double eps1, double eps2,
                                            double delta0, double coupling_strength);

  /// eps1 > 1, eps2 > 0, positive scales. Throws std::invalid_argument.
  void validate() const;
  /// zeta equals 3z + 2 or 2z + 1 (within 1e-12).
  bool exponent_consistent() const;
};

struct ScaledParameters {
  double tau = 0.0;
  double width = 0.0;
  /// Nominal runtime n^zeta / delta0.
  double total_time = 0.0;
  /// round(T / (tau + w)) rounded up to a multiple of K.
  std::size_t total_pulses = 0;

  /// L (tau + w), the runtime actually realized by whole cycles.
  double realized_time() const { return static_cast<double>(total_pulses) * (tau + width); }
};

/// tau = c_tau n^-(zeta + eps1) / delta0, w = c_w n^-(2 zeta + eps1 + eps2) / J.
ScaledParameters scaled_parameters(const ScalingRule& rule, double n, std::size_t pulses_per_cycle);

}  // namespace aqcs
