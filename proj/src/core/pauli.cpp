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

#include "aqcs/core/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace aqcs {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_length(const PauliString& a, const PauliString& b, const char* op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
}

// Single-qubit product a*b = i^k c. Returns k.
std::uint8_t letter_product(Pauli a, Pauli b, Pauli& out) {
  const auto ia = static_cast<int>(a);
  const auto ib = static_cast<int>(b);
  if (ia == 0) {
    out = b;
    return 0;
  }
  if (ib == 0 || ia == ib) {
    out = ia == ib ? Pauli::I : a;
    return 0;
  }
  out = static_cast<Pauli>(6 - ia - ib);
  // Cyclic X->Y->Z gives +i, anticyclic gives -i.
  return ((ib - ia + 3) % 3) == 1 ? 1 : 3;
}

// Value of the nonzero entry in column `col` of the dense matrix of p.
std::complex<double> column_value(const PauliString& p, std::uint64_t col, std::size_t num_y,
                                  std::uint64_t zy_mask) {
  auto k = static_cast<std::uint8_t>((p.phase_exponent() + num_y) & 3);
  if (std::popcount(col & zy_mask) & 1) k = static_cast<std::uint8_t>((k + 2) & 3);
  return kPhases[k];
}

std::size_t count_y(const PauliString& p) {
  std::size_t y = 0;
  for (auto l : p.letters()) y += l == Pauli::Y;
  return y;
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

PauliString::PauliString(std::size_t n) : letters_(n, Pauli::I) {}

PauliString::PauliString(std::vector<Pauli> letters, std::uint8_t phase_exponent)
    : letters_(std::move(letters)), phase_(phase_exponent & 3) {}

PauliString PauliString::parse(std::string_view text) {
  std::uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) & 3);
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I':
      case '_':
        letters.push_back(Pauli::I);
        break;
      case 'X':
        letters.push_back(Pauli::X);
        break;
      case 'Y':
        letters.push_back(Pauli::Y);
        break;
      case 'Z':
        letters.push_back(Pauli::Z);
        break;
      default:
        throw std::invalid_argument("PauliString::parse: unexpected character '" + std::string(1, c) +
                                    "'");
    }
  }
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, Pauli p) {
  if (qubit >= n) throw std::out_of_range("PauliString::single: qubit index out of range");
  PauliString s(n);
  s.letters_[qubit] = p;
  return s;
}

PauliString PauliString::uniform(std::size_t n, Pauli p) {
  return PauliString(std::vector<Pauli>(n, p));
}

std::complex<double> PauliString::phase() const { return kPhases[phase_]; }

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (auto l : letters_) w += l != Pauli::I;
  return w;
}

PauliString PauliString::canonical() const { return PauliString(letters_, 0); }

PauliString PauliString::with_phase_exponent(std::uint8_t k) const { return PauliString(letters_, k); }

PauliString PauliString::adjoint() const {
  return PauliString(letters_, static_cast<std::uint8_t>((4 - phase_) & 3));
}

std::string PauliString::str() const {
  static const char* prefixes[4] = {"+", "+i", "-", "-i"};
  return prefixes[phase_] + letters_str();
}

std::string PauliString::letters_str() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto l : letters_) out.push_back(pauli_char(l));
  return out;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  require_same_length(*this, rhs, "pauli_mul");
  std::vector<Pauli> letters(size());
  unsigned k = phase_ + rhs.phase_;
  for (std::size_t q = 0; q < size(); ++q) k += letter_product(letters_[q], rhs.letters_[q], letters[q]);
  return PauliString(std::move(letters), static_cast<std::uint8_t>(k & 3));
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  const std::size_t n = size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  const std::size_t n = size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) { return a * b; }

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_length(a, b, "commutes");
  std::size_t clashes = 0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    clashes += a[q] != Pauli::I && b[q] != Pauli::I && a[q] != b[q];
  }
  return clashes % 2 == 0;
}

Operator to_dense(const PauliString& p, std::size_t max_qubits) {
  if (p.size() > max_qubits) {
    throw std::length_error("to_dense: " + std::to_string(p.size()) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << p.size();
  const auto xm = p.x_mask();
  const auto zm = p.z_mask();
  const auto ny = count_y(p);
  Operator out = Operator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    out(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c)) = column_value(p, c, ny, zm);
  }
  return out;
}

StateVector apply(const PauliString& p, const StateVector& psi) {
  const std::uint64_t dim = std::uint64_t{1} << p.size();
  if (static_cast<std::uint64_t>(psi.size()) != dim) {
    throw std::invalid_argument("apply: state dimension does not match Pauli string length");
  }
  const auto xm = p.x_mask();
  const auto zm = p.z_mask();
  const auto ny = count_y(p);
  StateVector out(psi.size());
  for (std::uint64_t c = 0; c < dim; ++c) {
    out(static_cast<Eigen::Index>(c ^ xm)) = column_value(p, c, ny, zm) * psi(static_cast<Eigen::Index>(c));
  }
  return out;
}

Operator conjugate(const PauliString& p, const Operator& a, std::size_t bath_dim) {
  const std::uint64_t sys_dim = std::uint64_t{1} << p.size();
  const auto bd = static_cast<Eigen::Index>(bath_dim);
  if (a.rows() != a.cols() || static_cast<std::uint64_t>(a.rows()) != sys_dim * bath_dim) {
    throw std::invalid_argument("conjugate: operator dimension does not match string (x) bath");
  }
  const auto xm = p.x_mask();
  const auto zm = p.z_mask();
  // Global phase cancels in P^dagger A P, so only the sign pattern matters.
  const PauliString unphased = p.canonical();
  const auto ny = count_y(unphased);
  Operator out(a.rows(), a.cols());
  for (std::uint64_t rs = 0; rs < sys_dim; ++rs) {
    const auto vr = std::conj(column_value(unphased, rs, ny, zm));
    const auto src_r = static_cast<Eigen::Index>(rs ^ xm) * bd;
    for (std::uint64_t cs = 0; cs < sys_dim; ++cs) {
      const auto v = vr * column_value(unphased, cs, ny, zm);
      const auto src_c = static_cast<Eigen::Index>(cs ^ xm) * bd;
      out.block(static_cast<Eigen::Index>(rs) * bd, static_cast<Eigen::Index>(cs) * bd, bd, bd) =
          v * a.block(src_r, src_c, bd, bd);
    }
  }
  return out;
}

Operator to_dense(const TermList& terms, std::size_t n, std::size_t max_qubits) {
  if (n > max_qubits) {
    throw std::length_error("to_dense: " + std::to_string(n) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  Operator out = Operator::Zero(dim, dim);
  for (const auto& t : terms) {
    if (t.string.size() != n) throw std::invalid_argument("to_dense: term length does not match n");
    const auto xm = t.string.x_mask();
    const auto zm = t.string.z_mask();
    const auto ny = count_y(t.string);
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(dim); ++c) {
      out(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c)) +=
          t.coefficient * column_value(t.string, c, ny, zm);
    }
  }
  return out;
}

}  // namespace aqcs
