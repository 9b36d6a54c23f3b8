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

#include <gtest/gtest.h>

#include <numbers>

#include "aqcs/codes/codes.hpp"
#include "aqcs/model/hamiltonians.hpp"
#include "aqcs/runner/verification.hpp"
#include "test_support.hpp"

namespace aqcs {
namespace {

using testing::max_abs;
using testing::random_hermitian;

StateVector pair(unsigned a, unsigned b) {
  StateVector v = StateVector::Zero(16);
  v(a) = v(b) = 1.0 / std::numbers::sqrt2;
  return v;
}

TEST(UniversalGroup, Structure) {
  const DecouplingGroup g4 = universal_group(4);
  EXPECT_EQ(g4.order(), 4u);
  EXPECT_TRUE(g4.is_abelian());
  EXPECT_TRUE(g4.is_linear());
  EXPECT_FALSE(universal_group(2).is_linear());
  EXPECT_FALSE(universal_group(6).is_linear());
  EXPECT_TRUE(universal_group(8).is_linear());
  EXPECT_THROW(universal_group(3), std::invalid_argument);
}

TEST(UniversalCode, FourQubitCodewords) {
  const UniversalCode uc = code_from_universal_group(4);
  ASSERT_EQ(uc.code.codewords.size(), 4u);
  const std::vector<std::pair<std::string, StateVector>> expected{
      {"00", pair(0b0000, 0b1111)}, {"10", pair(0b0011, 0b1100)}, {"01", pair(0b0101, 0b1010)}, {"11", pair(0b1001, 0b0110)}};
  for (const auto& [label, state] : expected) {
    const auto it = std::find(uc.code.labels.begin(), uc.code.labels.end(), label);
    ASSERT_NE(it, uc.code.labels.end()) << label;
    const auto& cw = uc.code.codewords[static_cast<std::size_t>(it - uc.code.labels.begin())];
    EXPECT_NEAR(std::abs(state.dot(cw)), 1.0, 1e-14) << label;
  }
  const std::string listing = describe_codewords(uc.code);
  EXPECT_NE(listing.find("00: (|0000⟩+|1111⟩)"), std::string::npos) << listing;
  EXPECT_NE(listing.find("11: (|0110⟩+|1001⟩)"), std::string::npos) << listing;
}

TEST(UniversalCode, LogicalOperatorsActOnLabels) {
  const UniversalCode uc = code_from_universal_group(6);
  EXPECT_EQ(uc.code.k, 4u);
  EXPECT_EQ(uc.logicals.xbars.size(), 4u);
  const Operator p = uc.code.projector();
  for (std::size_t j = 0; j < 4; ++j) {
    const Operator x = to_dense(uc.logicals.xbars[j]);
    const Operator z = to_dense(uc.logicals.zbars[j]);
    EXPECT_LT(max_abs(x * p - p * x), 1e-13);
    EXPECT_LT(max_abs(x * z + z * x), 1e-13);
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != j) EXPECT_TRUE(commutes(uc.logicals.xbars[i], uc.logicals.zbars[j]));
    }
  }
}

TEST(UniversalCode, ProjectorIsGroupAverage) {
  const UniversalCode uc = code_from_universal_group(4);
  const DecouplingGroup g = universal_group(4);
  Operator avg = Operator::Zero(16, 16);
  for (const auto& e : g.elements()) avg += to_dense(e) / 4.0;
  EXPECT_LT(max_abs(uc.code.projector() - avg), 1e-14);
  EXPECT_EQ(syndrome_sectors(uc.code).size(), 4u);
}

TEST(GroupAverage, AnnihilatesLinearDecoherence) {
  for (std::size_t n : {2u, 4u, 6u}) {
    const DecouplingGroup g = universal_group(n);
    const SystemBathSpec bath = linear_decoherence(n, 1, 1.0, 1.0, 3);
    EXPECT_LT(op_norm(group_average(g, bath.h_sb(), bath.bath_dim())), 1e-12) << n;
  }
}

TEST(GroupAverage, IsAProjection) {
  const DecouplingGroup g = universal_group(4);
  const Operator a = random_hermitian(32, 8);
  const Operator once = group_average(g, a, 2);
  EXPECT_LT(op_norm(group_average(g, once, 2) - once), 1e-12);
}

TEST(EncodedHamiltonian, CommutesWithGroup) {
  const TermList logical{{1.0, PauliString::parse("XI")}, {0.5, PauliString::parse("ZZ")}, {-0.3, PauliString::parse("XX")}};
  const TermList encoded = encode_hamiltonian(logical, 4);
  const Operator h = to_dense(encoded, 4);
  const DecouplingGroup g = universal_group(4);
  for (const auto& e : g.elements()) {
    EXPECT_LT(max_abs(commutator(h, to_dense(e))), 1e-13);
  }
  for (const auto& t : encoded) EXPECT_LE(t.string.weight(), 2u);
  EXPECT_THROW(encode_hamiltonian(TermList{{1.0, PauliString::parse("YI")}}, 4), std::invalid_argument);
}

TEST(Penalty, SpectrumOnCodeAndErrors) {
  const DecouplingGroup g = universal_group(4);
  const UniversalCode uc = code_from_universal_group(4);
  const double ep = 0.7;
  const Operator hp = penalty_hamiltonian(g, ep);
  for (const auto& cw : uc.code.codewords) {
    EXPECT_LT((hp * cw + 3.0 * ep * cw).norm(), 1e-13);
    for (std::size_t q = 0; q < 4; ++q) {
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const PauliString err = PauliString::single(4, q, p);
        EXPECT_EQ(anticommuting_count(g, err), 2u);
        const StateVector bad = aqcs::apply(err, cw);
        EXPECT_LT((hp * bad - ep * bad).norm(), 1e-13);
      }
    }
  }
  EXPECT_THROW(penalty_hamiltonian(universal_group(2), 1.0), std::invalid_argument);
}

// Pi_G with a sign error in one term. Every group-average check has to notice.
Operator faulty_average(const DecouplingGroup& g, const Operator& a, std::size_t bath_dim) {
  Operator sum = Operator::Zero(a.rows(), a.cols());
  for (std::size_t k = 0; k < g.order(); ++k) {
    const Operator term = conjugate(g[k], a, bath_dim);
    sum += k == 1 ? Operator(-term) : term;
  }
  return sum / static_cast<double>(g.order());
}

TEST(Verification, DefaultGroupAveragePassesChecks) {
  VerificationOptions options;
  EXPECT_TRUE(check_group_average_idempotent(options).passed);
  EXPECT_TRUE(check_commutant_fixed_points(options).passed);
  EXPECT_TRUE(AcceptanceSuite(options).annihilation().passed);
}

TEST(Verification, SignErrorInGroupAverageIsCaught) {
  VerificationOptions options;
  options.group_average = faulty_average;
  EXPECT_FALSE(check_group_average_idempotent(options).passed);
  EXPECT_FALSE(check_commutant_fixed_points(options).passed);
  EXPECT_FALSE(AcceptanceSuite(options).annihilation().passed);
}

}  // namespace
}  // namespace aqcs
