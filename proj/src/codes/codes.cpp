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

#include "aqcs/codes/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aqcs {

namespace {

std::string basis_string(std::uint64_t bits, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if ((bits >> (n - 1 - q)) & 1) s[q] = '1';
  }
  return s;
}

const PauliString* find_by_letters(const std::vector<PauliString>& set, const PauliString& p) {
  for (const auto& e : set) {
    if (e.letters() == p.letters()) return &e;
  }
  return nullptr;
}

}  // namespace

DecouplingGroup::DecouplingGroup(std::vector<PauliString> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("DecouplingGroup: no elements");
  const std::size_t n = elements_.front().size();
  for (const auto& e : elements_) {
    if (e.size() != n) throw std::invalid_argument("DecouplingGroup: elements have different lengths");
  }
  if (!elements_.front().is_identity()) {
    throw std::invalid_argument("DecouplingGroup: G_0 must be the identity");
  }
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = a + 1; b < elements_.size(); ++b) {
      if (elements_[a].letters() == elements_[b].letters()) {
        throw std::invalid_argument("DecouplingGroup: repeated element " + elements_[a].letters_str());
      }
    }
  }
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (find_by_letters(elements_, a * b) == nullptr) {
        throw std::invalid_argument("DecouplingGroup: not closed, " + a.letters_str() + " * " +
                                    b.letters_str() + " is missing");
      }
    }
  }
}

DecouplingGroup DecouplingGroup::trivial(std::size_t n) { return DecouplingGroup({PauliString(n)}); }

bool DecouplingGroup::is_abelian() const {
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!commutes(a, b)) return false;
    }
  }
  return true;
}

bool DecouplingGroup::is_linear() const {
  std::vector<PauliString> reps;
  reps.reserve(elements_.size());
  for (const auto& e : elements_) reps.push_back(e.canonical());
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      if ((a * b).phase_exponent() != 0) return false;
    }
  }
  return true;
}

DecouplingGroup universal_group(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("universal_group: n must be even and >= 2, got " + std::to_string(n));
  }
  return DecouplingGroup({PauliString(n), PauliString::uniform(n, Pauli::X), PauliString::uniform(n, Pauli::Y),
                          PauliString::uniform(n, Pauli::Z)});
}

Operator group_average(const DecouplingGroup& g, const Operator& a) { return group_average(g, a, 1); }

Operator group_average(const DecouplingGroup& g, const Operator& a, std::size_t bath_dim) {
  const auto expected = static_cast<Eigen::Index>((std::size_t{1} << g.num_qubits()) * bath_dim);
  if (a.rows() != expected || a.cols() != expected) {
    throw std::invalid_argument("group_average: operator dimension " + std::to_string(a.rows()) +
                                " does not match group (expected " + std::to_string(expected) + ")");
  }
  Operator acc = Operator::Zero(a.rows(), a.cols());
  for (const auto& gk : g.elements()) acc += conjugate(gk, a, bath_dim);
  return acc / static_cast<double>(g.order());
}

Operator StabilizerCode::isometry() const {
  Operator v(static_cast<Eigen::Index>(std::size_t{1} << n), static_cast<Eigen::Index>(codewords.size()));
  for (std::size_t c = 0; c < codewords.size(); ++c) v.col(static_cast<Eigen::Index>(c)) = codewords[c];
  return v;
}

Operator StabilizerCode::projector() const {
  const Operator v = isometry();
  return v * v.adjoint();
}

UniversalCode code_from_universal_group(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("code_from_universal_group: n must be even and >= 2, got " + std::to_string(n));
  }
  UniversalCode out;
  auto& code = out.code;
  code.n = n;
  code.k = n - 2;
  code.generators = {PauliString::uniform(n, Pauli::X), PauliString::uniform(n, Pauli::Z)};

  const std::uint64_t all_ones = (std::uint64_t{1} << n) - 1;
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::uint64_t label = 0; label < (std::uint64_t{1} << code.k); ++label) {
    // Xbar_j flips physical qubits 0 and j+1, so qubit j+1 carries b_j and
    // qubit 0 carries the parity of the label.
    std::uint64_t x = 0;
    int parity = 0;
    for (std::size_t j = 0; j < code.k; ++j) {
      const bool bj = (label >> (code.k - 1 - j)) & 1;
      if (bj) {
        x |= std::uint64_t{1} << (n - 1 - (j + 1));
        parity ^= 1;
      }
    }
    if (parity) x |= std::uint64_t{1} << (n - 1);
    StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(all_ones + 1));
    psi(static_cast<Eigen::Index>(x)) = amp;
    psi(static_cast<Eigen::Index>(x ^ all_ones)) = amp;
    code.codewords.push_back(std::move(psi));
    code.labels.push_back(basis_string(label, code.k));
  }

  for (std::size_t j = 0; j < code.k; ++j) {
    PauliString xb = PauliString::single(n, 0, Pauli::X) * PauliString::single(n, j + 1, Pauli::X);
    PauliString zb = PauliString::single(n, j + 1, Pauli::Z) * PauliString::single(n, n - 1, Pauli::Z);
    out.logicals.xbars.push_back(std::move(xb));
    out.logicals.zbars.push_back(std::move(zb));
  }
  return out;
}

std::string describe_codewords(const StabilizerCode& code) {
  std::ostringstream out;
  const std::size_t dim = std::size_t{1} << code.n;
  for (std::size_t c = 0; c < code.codewords.size(); ++c) {
    std::vector<std::uint64_t> support;
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(code.codewords[c](static_cast<Eigen::Index>(i))) > 1e-12) support.push_back(i);
    }
    if (support.size() != 2) throw std::logic_error("describe_codewords: codeword is not a two-term superposition");
    out << (code.labels[c].empty() ? "-" : code.labels[c]) << ": (|" << basis_string(support[0], code.n)
        << "⟩+|" << basis_string(support[1], code.n) << "⟩)/√2\n";
  }
  return out.str();
}

std::string describe_logicals(const LogicalOperatorSet& logicals) {
  std::ostringstream out;
  for (std::size_t j = 0; j < logicals.xbars.size(); ++j) {
    out << "Xbar_" << j + 1 << " = " << logicals.xbars[j].str() << '\n';
  }
  for (std::size_t j = 0; j < logicals.zbars.size(); ++j) {
    out << "Zbar_" << j + 1 << " = " << logicals.zbars[j].str() << '\n';
  }
  return out.str();
}

TermList encode_hamiltonian(const TermList& logical_terms, std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("encode_hamiltonian: n must be even and >= 2");
  const std::size_t k = n - 2;
  TermList out;
  out.reserve(logical_terms.size());
  for (const auto& term : logical_terms) {
    const auto& p = term.string;
    if (p.size() != k) {
      throw std::invalid_argument("encode_hamiltonian: logical term " + p.str() + " does not act on " +
                                  std::to_string(k) + " logical qubits");
    }
    if (p.phase_exponent() != 0) {
      throw std::invalid_argument("encode_hamiltonian: logical term " + p.str() + " must have phase +1");
    }
    std::vector<std::size_t> sites;
    for (std::size_t q = 0; q < k; ++q) {
      if (p[q] != Pauli::I) sites.push_back(q);
    }
    const bool same_letter = std::all_of(sites.begin(), sites.end(), [&](std::size_t q) { return p[q] == p[sites[0]]; });
    if (sites.empty() || sites.size() > 2 || !same_letter || p[sites[0]] == Pauli::Y) {
      throw std::invalid_argument("encode_hamiltonian: unsupported logical term " + p.str() +
                                  " (only X, Z, XX and ZZ are encodable)");
    }
    const Pauli letter = p[sites[0]];
    PauliString phys(n);
    if (sites.size() == 1) {
      const std::size_t j = sites[0];
      phys = letter == Pauli::X ? PauliString::single(n, 0, Pauli::X) * PauliString::single(n, j + 1, Pauli::X)
                                : PauliString::single(n, j + 1, Pauli::Z) * PauliString::single(n, n - 1, Pauli::Z);
    } else {
      phys = PauliString::single(n, sites[0] + 1, letter) * PauliString::single(n, sites[1] + 1, letter);
    }
    out.push_back({term.coefficient, std::move(phys)});
  }
  return out;
}

Operator penalty_hamiltonian(const DecouplingGroup& g, double ep) {
  if (ep < 0.0) throw std::invalid_argument("penalty_hamiltonian: penalty must be non-negative");
  if (!g.is_linear()) {
    throw std::invalid_argument(
        "penalty_hamiltonian: group is only projective with phase +1 elements "
        "(for the universal group this means n is not a multiple of 4)");
  }
  TermList terms;
  for (std::size_t j = 1; j < g.order(); ++j) terms.push_back({-ep, g[j].canonical()});
  return to_dense(terms, g.num_qubits());
}

std::size_t anticommuting_count(const DecouplingGroup& g, const PauliString& error) {
  return static_cast<std::size_t>(std::count_if(g.elements().begin(), g.elements().end(),
                                                [&](const PauliString& p) { return !commutes(p, error); }));
}

std::vector<SyndromeSector> syndrome_sectors(const StabilizerCode& code) {
  const auto& gens = code.generators;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!commutes(gens[a], gens[b])) {
        throw std::invalid_argument("syndrome_sectors: generators " + gens[a].str() + " and " + gens[b].str() +
                                    " anticommute");
      }
    }
  }
  std::vector<Operator> dense;
  dense.reserve(gens.size());
  for (const auto& gk : gens) dense.push_back(to_dense(gk));
  const Operator id = identity(std::size_t{1} << code.n);

  std::vector<SyndromeSector> sectors;
  const std::size_t m = gens.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    SyndromeSector sector;
    sector.projector = id;
    for (std::size_t g = 0; g < m; ++g) {
      const int sign = ((bits >> (m - 1 - g)) & 1) ? -1 : 1;
      sector.label.push_back(sign);
      sector.projector = sector.projector * (0.5 * (id + static_cast<double>(sign) * dense[g]));
    }
    sectors.push_back(std::move(sector));
  }
  return sectors;
}

}  // namespace aqcs
