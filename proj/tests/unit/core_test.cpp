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

#include <array>
#include <numbers>

#include "aqcs/core/dense.hpp"
#include "aqcs/core/pauli.hpp"
#include "test_support.hpp"

namespace aqcs {
namespace {

using testing::max_abs;
using testing::random_hermitian;
using testing::random_state;

TEST(PauliString, ParseAndPrint) {
  EXPECT_EQ(PauliString::parse("XIZ").str(), "+XIZ");
  EXPECT_EQ(PauliString::parse("-iY_Y").str(), "-iYIY");
  EXPECT_EQ(PauliString::parse("-iYIY").letters_str(), "YIY");
  EXPECT_EQ(PauliString::parse("XYZI").weight(), 3u);
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(PauliString, SingleQubitProducts) {
  const auto x = PauliString::parse("X");
  const auto y = PauliString::parse("Y");
  const auto z = PauliString::parse("Z");
  EXPECT_EQ(x * y, PauliString::parse("iZ"));
  EXPECT_EQ(y * x, PauliString::parse("-iZ"));
  EXPECT_EQ(z * x, PauliString::parse("iY"));
  EXPECT_TRUE((x * x).is_identity());
  EXPECT_FALSE(commutes(x, z));
  EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
}

TEST(PauliString, QubitZeroIsMostSignificant) {
  // X on qubit 0 of two maps |00> to |10>, basis index 2.
  StateVector psi = StateVector::Zero(4);
  psi(0) = 1.0;
  const StateVector out = aqcs::apply(PauliString::single(2, 0, Pauli::X), psi);
  EXPECT_EQ(out(2), cplx(1.0));
}

TEST(PauliString, DenseMatchesKron) {
  Operator x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  EXPECT_LT(max_abs(to_dense(PauliString::parse("XZ")) - kron(x, z)), 1e-15);
}

TEST(PauliString, RandomProductsMatchDenseAlgebra) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::string a, b;
    for (int q = 0; q < 3; ++q) {
      a += "IXYZ"[letter(rng)];
      b += "IXYZ"[letter(rng)];
    }
    const auto pa = PauliString::parse(a);
    const auto pb = PauliString::parse(b);
    const Operator da = to_dense(pa);
    const Operator db = to_dense(pb);
    EXPECT_LT(max_abs(to_dense(pa * pb) - da * db), 1e-14) << a << " " << b;
    EXPECT_EQ(commutes(pa, pb), max_abs(da * db - db * da) < 1e-12) << a << " " << b;
  }
}

TEST(PauliString, ApplyAndConjugateMatchDense) {
  const auto p = PauliString::parse("-YXZ");
  const StateVector psi = random_state(8, 3);
  EXPECT_LT((aqcs::apply(p, psi) - to_dense(p) * psi).norm(), 1e-14);
  const Operator a = random_hermitian(16, 4);
  const Operator lifted = kron(to_dense(p), identity(2));
  EXPECT_LT(max_abs(conjugate(p, a, 2) - lifted.adjoint() * a * lifted), 1e-13);
}

TEST(TermList, DenseSum) {
  const TermList terms{{0.5, PauliString::parse("ZI")}, {-2.0, PauliString::parse("XX")}};
  const Operator h = to_dense(terms, 2);
  EXPECT_LT(max_abs(h - (0.5 * to_dense(terms[0].string) - 2.0 * to_dense(terms[1].string))), 1e-15);
  EXPECT_EQ(to_dense(TermList{}, 2).norm(), 0.0);
}

TEST(Dense, ExpAndLogAreInverse) {
  const Operator h = 0.3 * random_hermitian(8, 5) / op_norm(random_hermitian(8, 5));
  const Operator u = expm_hermitian(h, 1.0);
  EXPECT_TRUE(is_unitary(u));
  EXPECT_LT(max_abs(logm_unitary(u) - h), 1e-12);
}

TEST(Dense, LogOnBranchCutThrows) {
  EXPECT_THROW(logm_unitary(-identity(2)), BranchError);
  Operator not_unitary = identity(2);
  not_unitary(0, 0) = 2.0;
  EXPECT_THROW(logm_unitary(not_unitary), std::invalid_argument);
}

TEST(Dense, Norms) {
  Operator d = Operator::Zero(3, 3);
  d.diagonal() << 1.0, -2.0, 0.5;
  EXPECT_NEAR(op_norm(d), 2.0, 1e-15);
  EXPECT_NEAR(trace_norm(d), 3.5, 1e-14);
}

TEST(Dense, PartialTraceOfProduct) {
  const StateVector a = random_state(2, 1);
  const StateVector b = random_state(4, 2);
  const Operator rho = kron(projector(a), projector(b));
  const std::array<std::size_t, 2> dims{2, 4};
  const std::array<std::size_t, 1> first{0};
  const std::array<std::size_t, 1> second{1};
  EXPECT_LT(max_abs(partial_trace(rho, dims, first) - projector(a)), 1e-14);
  EXPECT_LT(max_abs(partial_trace(rho, dims, second) - projector(b)), 1e-14);
}

TEST(DensityMatrix, Construction) {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  EXPECT_NEAR(mixed.trace(), 1.0, 1e-15);
  EXPECT_TRUE(mixed.is_positive());
  EXPECT_THROW(DensityMatrix(identity(2)), std::invalid_argument);
  const DensityMatrix pure = DensityMatrix::pure(random_state(4, 9));
  const Operator u = expm_hermitian(random_hermitian(4, 10), 0.7);
  EXPECT_NEAR(pure.evolved(u).trace(), 1.0, 1e-13);
}

}  // namespace
}  // namespace aqcs
