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

#include <cstdint>
#include <functional>
#include <vector>

#include "aqcs/core/dense.hpp"
#include "aqcs/core/pauli.hpp"
#include "aqcs/model/schedule.hpp"

namespace aqcs {

/// H_ad(s) = (1 - f(s)) H0 + f(s) H1 over n qubits.
struct AdiabaticSpec {
  std::size_t n = 0;
  TermList h0;
  TermList h1;
  ScheduleKind schedule = ScheduleKind::smooth_endpoint;
  /// Total evolution time T, in units of 1/delta0.
  double total_time = 1.0;
  double delta0 = 1.0;
  /// Optional isometry (orthonormal columns) onto the subspace where the
  /// computation lives, e.g. a code space. Ground states and gaps are taken
  /// inside it. Empty means the full 2^n space.
  Operator subspace;
};

Operator h_ad(const AdiabaticSpec& spec, double s);

/// Dense cache of H0 and H1 for repeated evaluation.
class AdiabaticHamiltonian {
 public:
  explicit AdiabaticHamiltonian(const AdiabaticSpec& spec);

  Operator at(double s) const;
  const Operator& initial() const { return h0_; }
  const Operator& final() const { return h1_; }
  ScheduleKind schedule() const { return schedule_; }
  Eigen::Index dim() const { return h0_.rows(); }

 private:
  Operator h0_;
  Operator h1_;
  ScheduleKind schedule_;
};

enum class Axis { x, y, z };

using Coefficient = std::function<double(double)>;

struct LocalField {
  std::size_t qubit = 0;
  Axis axis = Axis::z;
  Coefficient coefficient;
};

struct Coupling {
  std::size_t i = 0;
  std::size_t j = 0;
  Axis axis = Axis::z;
  Coefficient coefficient;
};

/// sum h_i^a(s) sigma_i^a + sum J_ij^a(s) sigma_i^a sigma_j^a with a in {x, z}.
/// Terms whose coefficient evaluates to zero are dropped. Axis::y throws.
TermList universal_aqc_terms(std::size_t n, const std::vector<LocalField>& fields,
                             const std::vector<Coupling>& couplings, double s);

/// The built-in 2-local instance used by the CLI and the acceptance suite.
///
/// On m computational qubits: H0 = -delta0 sum_j X_j and H1 an Ising chain
/// with fixed z-fields, ZZ couplings and one XX coupling. With `encoded`,
/// m = n - 2 logical qubits are mapped onto n physical qubits of the
/// [[n, n-2, 2]] code and `subspace` is set to the code space.
AdiabaticSpec universal_2local_preset(std::size_t n, bool encoded, ScheduleKind schedule, double total_time,
                                      double delta0 = 1.0);

struct BathCoupling {
  PauliString system;
  Operator bath;
};

/// H_SB = sum_a S_a (x) B_a and the bath Hamiltonian H_B.
struct SystemBathSpec {
  std::size_t n = 0;
  std::size_t n_bath = 0;
  std::vector<BathCoupling> couplings;
  Operator h_bath;
  /// J = ||H_SB||.
  double coupling_strength = 0.0;
  /// beta_B = ||H_B||.
  double bath_norm = 0.0;
  std::uint64_t seed = 0;

  std::size_t bath_dim() const { return std::size_t{1} << n_bath; }
  Operator h_sb() const;
};

/// Linear decoherence model: sigma_j^a (x) B_j^a for every qubit j and
/// a in {x, y, z}, with seeded random Hermitian B_j^a rescaled together so
/// that ||H_SB|| = J. H_B is a seeded random 2-local Hermitian on the bath
/// rescaled to ||H_B|| = beta_B. J = 0 gives zero bath operators.
SystemBathSpec linear_decoherence(std::size_t n, std::size_t n_bath, double coupling_strength,
                                  double bath_norm, std::uint64_t seed);

}  // namespace aqcs
