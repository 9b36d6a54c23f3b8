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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aqcs/core/dense.hpp"

namespace aqcs {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Phased tensor product of single-qubit Pauli letters, i^k * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of
/// a computational-basis index. This matches the usual ket notation where
/// |0011> has qubits 0 and 1 in state |0>.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n);

  PauliString(std::vector<Pauli> letters, std::uint8_t phase_exponent = 0);

  /// Accepts an optional sign prefix ("+", "-", "+i", "-i", "i") followed by
  /// letters from "IXYZ_" ('_' is an alias for I).
  static PauliString parse(std::string_view text);

  /// Single letter `p` on `qubit`, identity elsewhere.
  static PauliString single(std::size_t n, std::size_t qubit, Pauli p);

  /// The same letter on every qubit (global X, Y or Z).
  static PauliString uniform(std::size_t n, Pauli p);

  std::size_t size() const { return letters_.size(); }
  Pauli operator[](std::size_t qubit) const { return letters_[qubit]; }
  const std::vector<Pauli>& letters() const { return letters_; }

  /// Phase is i^phase_exponent().
  std::uint8_t phase_exponent() const { return phase_; }
  std::complex<double> phase() const;

  std::size_t weight() const;
  bool is_identity() const { return weight() == 0; }

  /// Same letters with phase +1.
  PauliString canonical() const;
  PauliString with_phase_exponent(std::uint8_t k) const;

  /// Hermitian conjugate (letters unchanged, phase conjugated).
  PauliString adjoint() const;

  /// e.g. "+XIZ", "-iYY".
  std::string str() const;
  /// Letters only, e.g. "XIZ".
  std::string letters_str() const;

  PauliString operator*(const PauliString& rhs) const;

  bool operator==(const PauliString& other) const = default;

  /// Bit masks over basis-index bits (bit n-1-q for qubit q).
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

 private:
  std::vector<Pauli> letters_;
  std::uint8_t phase_ = 0;
};

PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// True iff ab = ba. Phases are irrelevant.
bool commutes(const PauliString& a, const PauliString& b);

inline constexpr std::size_t kDefaultMaxQubits = 12;

/// 2^n x 2^n matrix of the string, including its phase.
Operator to_dense(const PauliString& p, std::size_t max_qubits = kDefaultMaxQubits);

/// p |psi>, without forming the dense matrix.
StateVector apply(const PauliString& p, const StateVector& psi);

/// P^dagger A P where A acts on (qubits of p) (x) (bath of dimension
/// bath_dim), with p acting on the leading tensor factor.
Operator conjugate(const PauliString& p, const Operator& a, std::size_t bath_dim = 1);

/// Real-coefficient Pauli term, the building block of Hamiltonians.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;

  bool operator==(const PauliTerm& other) const = default;
};

using TermList = std::vector<PauliTerm>;

/// Sum of the terms as a dense 2^n x 2^n operator. Every term must have n
/// letters. An empty list gives the zero matrix.
Operator to_dense(const TermList& terms, std::size_t n, std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace aqcs
