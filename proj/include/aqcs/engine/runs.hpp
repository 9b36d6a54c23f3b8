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
#include <stdexcept>
#include <string>

#include "aqcs/codes/codes.hpp"
#include "aqcs/core/dense.hpp"
#include "aqcs/engine/integrator.hpp"
#include "aqcs/model/hamiltonians.hpp"
#include "aqcs/protocols/pdd.hpp"

namespace aqcs {

class DegenerateGroundState : public std::domain_error {
 public:
  explicit DegenerateGroundState(const std::string& what) : std::domain_error(what) {}
};

/// Lowest eigenvector of h inside the span of `subspace` (full space when
/// empty). The largest-magnitude amplitude is made real and positive.
/// Throws DegenerateGroundState when the two lowest levels are within 1e-12.
StateVector ground_state(const Operator& h, const Operator& subspace);

StateVector instantaneous_ground_state(const AdiabaticSpec& spec, double s);

struct ClosedRun {
  StateVector psi_initial;
  StateVector psi_final;
  StateVector ground_final;
  double delta_ad = 0.0;
  double total_time = 0.0;
  std::size_t steps = 0;
};

/// Closed evolution of the ground state of H_ad(0) for total time r T.
ClosedRun run_closed_adiabatic(const AdiabaticSpec& spec, double dilation, IntegratorConfig cfg = {});

enum class BathInitialState { maximally_mixed, ground };

DensityMatrix bath_initial_state(const SystemBathSpec& bath, BathInitialState kind);

struct ProtectedModel {
  AdiabaticSpec adiabatic;
  SystemBathSpec bath;
  /// Stabilizer group for H_P = -E_P sum of its nontrivial elements.
  std::optional<DecouplingGroup> penalty_group;
  double penalty = 0.0;
  /// When false, H_P is switched off inside pulse windows.
  bool penalty_during_pulses = true;
};

struct RunDiagnostics {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_local_error = 0.0;
  double unitarity_error = 0.0;
  /// False when the interaction-frame propagator had an eigenphase at the
  /// branch cut, in which case h_eff is empty and phi is NaN.
  bool branch_ok = true;
};

struct RunArtifacts {
  Operator u_total;
  Operator u_interaction;
  DensityMatrix rho_final;
  DensityMatrix rho_system;
  Operator h_eff;
  double phi = 0.0;
  double total_time = 0.0;
  RunDiagnostics diagnostics;
};

struct ProtectedRun {
  RunArtifacts coupled;
  RunArtifacts uncoupled;
  /// Closed system reference on the coupled run's step grid.
  StateVector psi_initial;
  StateVector psi_closed;
  StateVector ground_final;
  double delta_ad = 0.0;
  Operator u_ad;
  Operator u_bath;
  DensityMatrix bath_initial;
  /// rho_B(0) evolved by H_B alone.
  DensityMatrix bath_final;
  /// max_s ||(H_ad(s) + H_P) x I + I x H_B||.
  double beta = 0.0;
  std::size_t system_dim = 0;
  std::size_t bath_dim = 0;
};

/// Coupled run, its H_SB = 0 twin and the closed reference, all sharing
/// one step grid. The adiabatic time is the schedule's total time.
ProtectedRun run_protected(const ProtectedModel& model, const PulseSchedule& schedule,
                           const DensityMatrix& bath_initial, IntegratorConfig cfg = {});

/// Slices of a schedule: a free interval then a pulse window per slot.
/// Ideal schedules carry each pulse, tensored with I_B, as a kick.
Timeline schedule_timeline(const PulseSchedule& schedule, std::size_t bath_dim);

Operator interaction_frame(const Operator& u_total, const Operator& u_ad, const Operator& u_bath);

struct EffectiveHamiltonian {
  Operator h_eff;
  double phi = 0.0;
};

/// H_eff = i log(U) / T after removing the phase of tr U. Throws BranchError.
EffectiveHamiltonian effective_hamiltonian(const Operator& u_interaction, double total_time);

/// First-order cycle average of the interaction, with group elements acting
/// on the system factor of a system x bath operator.
Operator magnus_first_order(const DecouplingGroup& g, const Operator& h_sb, std::size_t bath_dim);

}  // namespace aqcs
