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

#include "aqcs/model/hamiltonians.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "aqcs/codes/codes.hpp"

namespace aqcs {

namespace {

Pauli axis_letter(Axis a) {
  switch (a) {
    case Axis::x:
      return Pauli::X;
    case Axis::z:
      return Pauli::Z;
    case Axis::y:
      break;
  }
  throw std::invalid_argument("universal_aqc_terms: only x and z couplings are allowed");
}

Operator random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  Operator a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(r, c) = cplx(re, im);
    }
  }
  return hermitian_part(a);
}

}  // namespace

Operator h_ad(const AdiabaticSpec& spec, double s) { return AdiabaticHamiltonian(spec).at(s); }

AdiabaticHamiltonian::AdiabaticHamiltonian(const AdiabaticSpec& spec)
    : h0_(to_dense(spec.h0, spec.n)), h1_(to_dense(spec.h1, spec.n)), schedule_(spec.schedule) {
  if (!is_hermitian(h0_) || !is_hermitian(h1_)) {
    throw std::invalid_argument("AdiabaticHamiltonian: H0 and H1 must be Hermitian (use phase +/-1 strings)");
  }
}

Operator AdiabaticHamiltonian::at(double s) const {
  const double f = schedule_eval(schedule_, s).f;
  return (1.0 - f) * h0_ + f * h1_;
}

TermList universal_aqc_terms(std::size_t n, const std::vector<LocalField>& fields,
                             const std::vector<Coupling>& couplings, double s) {
  TermList terms;
  for (const auto& field : fields) {
    const Pauli letter = axis_letter(field.axis);
    const double c = field.coefficient ? field.coefficient(s) : 0.0;
    if (c != 0.0) terms.push_back({c, PauliString::single(n, field.qubit, letter)});
  }
  for (const auto& coupling : couplings) {
    const Pauli letter = axis_letter(coupling.axis);
    if (coupling.i == coupling.j) throw std::invalid_argument("universal_aqc_terms: coupling needs two distinct qubits");
    const double c = coupling.coefficient ? coupling.coefficient(s) : 0.0;
    if (c != 0.0) {
      terms.push_back({c, PauliString::single(n, coupling.i, letter) * PauliString::single(n, coupling.j, letter)});
    }
  }
  return terms;
}

AdiabaticSpec universal_2local_preset(std::size_t n, bool encoded, ScheduleKind schedule, double total_time,
                                      double delta0) {
  if (encoded && (n < 4 || n % 2 != 0)) {
    throw std::invalid_argument("universal_2local_preset: encoded mode needs even n >= 4");
  }
  if (n == 0) throw std::invalid_argument("universal_2local_preset: n must be positive");
  const std::size_t m = encoded ? n - 2 : n;

  auto constant = [delta0](double c) { return [v = c * delta0](double) { return v; }; };
  static constexpr std::array<double, 6> kFields = {0.5, -0.3, 0.2, -0.4, 0.35, -0.25};
  static constexpr std::array<double, 2> kChain = {0.8, -0.6};

  std::vector<LocalField> initial_fields;
  std::vector<LocalField> final_fields;
  std::vector<Coupling> final_couplings;
  for (std::size_t j = 0; j < m; ++j) {
    initial_fields.push_back({j, Axis::x, constant(-1.0)});
    final_fields.push_back({j, Axis::z, constant(kFields[j % kFields.size()])});
  }
  for (std::size_t j = 0; j + 1 < m; ++j) final_couplings.push_back({j, j + 1, Axis::z, constant(kChain[j % 2])});
  if (m >= 2) final_couplings.push_back({0, 1, Axis::x, constant(0.2)});

  AdiabaticSpec spec;
  spec.n = n;
  spec.schedule = schedule;
  spec.total_time = total_time;
  spec.delta0 = delta0;
  TermList h0 = universal_aqc_terms(m, initial_fields, {}, 0.0);
  TermList h1 = universal_aqc_terms(m, final_fields, final_couplings, 1.0);
  if (encoded) {
    const auto code = code_from_universal_group(n);
    spec.h0 = encode_hamiltonian(h0, n);
    spec.h1 = encode_hamiltonian(h1, n);
    spec.subspace = code.code.isometry();
  } else {
    spec.h0 = std::move(h0);
    spec.h1 = std::move(h1);
  }
  return spec;
}

Operator SystemBathSpec::h_sb() const {
  const auto dim = static_cast<Eigen::Index>((std::size_t{1} << n) * bath_dim());
  Operator out = Operator::Zero(dim, dim);
  for (const auto& c : couplings) out += kron(to_dense(c.system), c.bath);
  return out;
}

SystemBathSpec linear_decoherence(std::size_t n, std::size_t n_bath, double coupling_strength, double bath_norm,
                                  std::uint64_t seed) {
  if (n == 0 || n_bath == 0) throw std::invalid_argument("linear_decoherence: need at least one system and one bath qubit");
  if (coupling_strength < 0.0 || bath_norm < 0.0) {
    throw std::invalid_argument("linear_decoherence: J and beta_B must be non-negative");
  }
  SystemBathSpec spec;
  spec.n = n;
  spec.n_bath = n_bath;
  spec.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t bd = spec.bath_dim();

  for (std::size_t j = 0; j < n; ++j) {
    for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
      spec.couplings.push_back({PauliString::single(n, j, a), random_hermitian(bd, rng)});
    }
  }
  const double raw = op_norm(spec.h_sb());
  const double scale = raw > 0.0 ? coupling_strength / raw : 0.0;
  for (auto& c : spec.couplings) c.bath *= scale;
  spec.coupling_strength = coupling_strength;

  std::normal_distribution<double> normal(0.0, 1.0);
  TermList bath_terms;
  for (std::size_t q = 0; q < n_bath; ++q) {
    for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) bath_terms.push_back({normal(rng), PauliString::single(n_bath, q, a)});
  }
  for (std::size_t q = 0; q < n_bath; ++q) {
    for (std::size_t r = q + 1; r < n_bath; ++r) {
      for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (Pauli b : {Pauli::X, Pauli::Y, Pauli::Z}) {
          bath_terms.push_back({normal(rng), PauliString::single(n_bath, q, a) * PauliString::single(n_bath, r, b)});
        }
      }
    }
  }
  spec.h_bath = to_dense(bath_terms, n_bath);
  const double raw_bath = op_norm(spec.h_bath);
  spec.h_bath *= raw_bath > 0.0 ? bath_norm / raw_bath : 0.0;
  spec.bath_norm = bath_norm;
  return spec;
}

}  // namespace aqcs
