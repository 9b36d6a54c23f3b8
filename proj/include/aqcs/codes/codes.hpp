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

#include "aqcs/core/dense.hpp"
#include "aqcs/core/pauli.hpp"

namespace aqcs {

/// Finite group of Pauli strings used for decoupling, with G_0 = I.
///
/// Closure is checked up to global phase, which is all that conjugation
/// (and therefore decoupling) can see.
class DecouplingGroup {
 public:
  explicit DecouplingGroup(std::vector<PauliString> elements);

  /// {I} on n qubits. Decoupling with it is the same as no decoupling.
  static DecouplingGroup trivial(std::size_t n);

  const std::vector<PauliString>& elements() const { return elements_; }
  const PauliString& operator[](std::size_t k) const { return elements_[k]; }
  std::size_t order() const { return elements_.size(); }
  std::size_t num_qubits() const { return elements_.front().size(); }

  bool is_abelian() const;

  /// True when the phase +1 representatives are closed under multiplication
  /// with exact phases, i.e. they form an honest matrix group and not only a
  /// projective one. Eigenvalue statements (penalties, stabilizer codes) need
  /// this; for the universal group it holds iff n is a multiple of 4.
  bool is_linear() const;

 private:
  std::vector<PauliString> elements_;
};

/// {I, X, Y, Z} with X, Y, Z the global strings. n must be even and >= 2.
DecouplingGroup universal_group(std::size_t n);

/// (1/K) sum_k G_k^dagger a G_k. `a` must match the group's qubit count.
Operator group_average(const DecouplingGroup& g, const Operator& a);

/// Same average with each G_k lifted to G_k (x) I_bath.
Operator group_average(const DecouplingGroup& g, const Operator& a, std::size_t bath_dim);

struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliString> generators;
  /// Logical basis states, in the order of `labels`.
  std::vector<StateVector> codewords;
  /// Logical bit strings, e.g. "10" for |10>_L. Empty string when k = 0.
  std::vector<std::string> labels;

  /// 2^n x 2^k matrix whose columns are the codewords.
  Operator isometry() const;
  Operator projector() const;
};

struct LogicalOperatorSet {
  std::vector<PauliString> xbars;
  std::vector<PauliString> zbars;
};

struct UniversalCode {
  StabilizerCode code;
  LogicalOperatorSet logicals;
};

/// The [[n, n-2, 2]] code stabilized by global X and Z.
///
/// Codewords are (|x> + |not x>)/sqrt(2) over even-weight x. The codeword
/// labelled b_1...b_{n-2} is prod_j Xbar_j^{b_j} |0...0>_L, with
/// Xbar_j = sigma^x_1 sigma^x_{j+1} and Zbar_j = sigma^z_{j+1} sigma^z_n
/// (1-based qubits as in the usual presentation; stored 0-based).
UniversalCode code_from_universal_group(std::size_t n);

/// One line per codeword, "label: (|bits>+|bits>)/√2" with the
/// lexicographically smaller basis string first.
std::string describe_codewords(const StabilizerCode& code);
/// One line per logical operator, "Xbar_j = +XXII".
std::string describe_logicals(const LogicalOperatorSet& logicals);

/// Replace every logical Pauli in `logical_terms` (strings on n-2 logical
/// qubits) by its 2-local encoded partner on n physical qubits.
///
/// Supported: single X or Z, and two-body XX or ZZ. Two-body terms use the
/// simplified form Xbar_i Xbar_j = sigma^x_{i+1} sigma^x_{j+1} (and ZZ
/// likewise). Anything else throws std::invalid_argument.
TermList encode_hamiltonian(const TermList& logical_terms, std::size_t n);

/// -E_P sum_{j>=1} P_j with each group element taken with phase +1.
/// Requires a linear group (see DecouplingGroup::is_linear) and ep >= 0.
Operator penalty_hamiltonian(const DecouplingGroup& g, double ep);

/// Number of group elements anticommuting with `error`.
std::size_t anticommuting_count(const DecouplingGroup& g, const PauliString& error);

struct SyndromeSector {
  /// +1/-1 eigenvalue per generator.
  std::vector<int> label;
  Operator projector;
};

/// One projector per joint eigenspace of the generators. Throws when the
/// generators do not pairwise commute.
std::vector<SyndromeSector> syndrome_sectors(const StabilizerCode& code);

}  // namespace aqcs
