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

#include <cmath>
#include <numbers>

#include "aqcs/metrics/metrics.hpp"
#include "aqcs/runner/verification.hpp"
#include "test_support.hpp"

namespace aqcs {
namespace {

using testing::random_state;

TEST(TraceDistance, Examples) {
  StateVector zero(2), plus(2);
  zero << 1.0, 0.0;
  plus << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(trace_distance(DensityMatrix::pure(zero), DensityMatrix::pure(plus)), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(trace_distance(zero, plus), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(trace_distance(DensityMatrix::pure(zero), DensityMatrix::maximally_mixed(2)), 0.5, 1e-15);
}

TEST(TraceDistance, PureOverloadAgreesAndResolvesSmallDistances) {
  for (std::uint64_t seed = 1; seed < 6; ++seed) {
    const StateVector a = random_state(8, seed);
    const StateVector b = random_state(8, seed + 100);
    EXPECT_NEAR(trace_distance(a, b), trace_distance(DensityMatrix::pure(a), DensityMatrix::pure(b)), 1e-12);
  }
  StateVector a(2), b(2);
  a << 1.0, 0.0;
  b << std::cos(1e-10), std::sin(1e-10);
  EXPECT_NEAR(trace_distance(a, b), 1e-10, 1e-20);
}

TEST(TraceDistance, TriangleAndContractivity) {
  const DensityMatrix a = DensityMatrix::pure(random_state(4, 1));
  const DensityMatrix b = DensityMatrix::pure(random_state(4, 2));
  const DensityMatrix c = DensityMatrix::maximally_mixed(4);
  EXPECT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-15);
  const std::array<std::size_t, 2> dims{2, 2};
  const std::array<std::size_t, 1> keep{0};
  EXPECT_LE(trace_distance(partial_trace(a, dims, keep), partial_trace(b, dims, keep)), trace_distance(a, b) + 1e-15);
}

TEST(PhiBudget, Terms) {
  const double J = 0.1, T = 8.0, w = 0.01, tau = 0.09, beta = 2.0;
  const std::size_t K = 4, L = 80;
  const PhiBudget b = phi_budget(J, T, w, tau, K, L, beta, 1.5);
  const double tc = 4 * 0.1;
  EXPECT_NEAR(b.term1, 1.5 * 0.64 / 20.0, 1e-15);
  EXPECT_NEAR(b.term2, 0.8 * 0.1, 1e-15);
  EXPECT_NEAR(b.term3, 0.8 * ((std::exp(2 * beta * tc) - 1) / (2 * beta * tc) - 1), 1e-14);
  EXPECT_NEAR(b.total, b.term1 + b.term2 + b.term3, 1e-15);
  EXPECT_TRUE(b.magnus_convergent);
  EXPECT_FALSE(b.third_term_valid);
  EXPECT_TRUE(phi_budget(J, T, w, tau, K, L, 0.1, 1.0).third_term_valid);
  EXPECT_EQ(phi_budget(J, T, 0.0, tau, K, L, 0.0, 1.0).term3, 0.0);
}

TEST(PhiBudget, ReferenceValues) {
  // J T = 1 and T_c = 4 * 0.01 = 0.04; term3 evaluated to 40 digits independently.
  const PhiBudget b = phi_budget(0.1, 10.0, 0.0, 0.01, 4, 400, 1.0, 1.0);
  EXPECT_NEAR(b.term1, 0.01, 1e-15);
  EXPECT_EQ(b.term2, 0.0);
  EXPECT_NEAR(b.term3, 0.0410883459369819304, 1e-15);
  EXPECT_NEAR(phi_budget(0.1, 10.0, 0.0, 0.01, 4, 800, 1.0, 1.0).term1, 0.005, 1e-15);
}

TEST(PhiBudget, CalibratedAlphaCoversPhi) {
  const double J = 0.1, T = 8.0, w = 0.01, tau = 0.09;
  const std::size_t K = 4, L = 80;
  const double phi = 0.2;
  const double alpha = calibrate_alpha(phi, J, T, w, tau, K, L, 1.0);
  const PhiBudget b = phi_budget(J, T, w, tau, K, L, 1.0, alpha);
  EXPECT_NEAR(b.term1 + b.term2, phi, 1e-14);
  EXPECT_EQ(calibrate_alpha(0.01, J, T, w, tau, K, L, 1.0), 0.0);
}

TEST(Prediction, ReferenceValue) {
  ScalingRule rule;
  rule.eps1 = 1.5;
  rule.eps2 = 0.5;
  rule.delta0 = 1.0;
  rule.coupling_strength = 1.0;
  const ErrorPrediction p = dd_error_prediction(rule, 4.0);
  EXPECT_NEAR(p.total, 1.125, 1e-12);
  EXPECT_LT(dd_error_prediction(rule, 16.0).total, p.total);
}

TEST(Prediction, ThreeTerms) {
  ScalingRule rule;
  rule.eps1 = 2.0;
  rule.eps2 = 1.0;
  rule.delta0 = 1.0;
  rule.coupling_strength = 0.5;
  const ErrorPrediction p = dd_error_prediction(rule, 4.0);
  EXPECT_NEAR(p.t1, 0.25 / 16.0, 1e-15);
  EXPECT_NEAR(p.t2, 0.25, 1e-15);
  EXPECT_NEAR(p.t3, 0.5 / 4.0, 1e-15);
  EXPECT_NEAR(p.total, p.t1 + p.t2 + p.t3, 1e-15);
}

// With U = exp(-i Phi Z x Z), |+> on the system and a maximally mixed bath
// qubit, the joint distance is sin(Phi), above (e^Phi - 1)/2 for small Phi.
TEST(PhiDistance, ZZCounterexample) {
  const Operator zz = to_dense(PauliString::parse("ZZ"));
  StateVector plus(2);
  plus << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  const DensityMatrix rho(kron(DensityMatrix::pure(plus).matrix(), DensityMatrix::maximally_mixed(2).matrix()));
  for (double phi : {0.05, 0.2, 0.8}) {
    const double d = trace_distance(rho.evolved(expm_hermitian(phi * zz, 1.0)), rho);
    EXPECT_NEAR(d, std::sin(phi), 1e-13);
    EXPECT_GT(d, std::expm1(phi) / 2.0);
    EXPECT_LE(d, std::expm1(phi));
  }
  EXPECT_TRUE(phi_distance_counterexample().passed);
}

TEST(Output, CsvHeader) {
  EXPECT_EQ(csv_header(), "n,J,tau,w,K,L,T,delta_ad,d_D,delta_S,d_tot,phi,slack_eq3,slack_eq5");
}

TEST(Verification, LoglogSlope) {
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
  EXPECT_THROW(loglog_slope({1}, {1}), std::invalid_argument);
}

TEST(Verification, InvariantChecksPass) {
  for (const auto& r : invariant_checks(VerificationOptions{})) EXPECT_TRUE(r.passed) << format_check(r);
}

TEST(Verification, KnownUnattainableFailuresDoNotCount) {
  CheckResult r{"5", "x", false, "", {}};
  EXPECT_TRUE(counts_as_failure(r));
  r.known_unattainable = true;
  EXPECT_FALSE(counts_as_failure(r));
  EXPECT_EQ(format_check(r).substr(0, 8), "FAIL [5]");
}

}  // namespace
}  // namespace aqcs
