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

#include "aqcs/model/hamiltonians.hpp"
#include "aqcs/model/schedule.hpp"
#include "aqcs/model/spectrum.hpp"
#include "aqcs/protocols/pdd.hpp"
#include "test_support.hpp"

namespace aqcs {
namespace {

using testing::max_abs;

TEST(Schedule, EndpointsAndDerivatives) {
  for (auto kind : {ScheduleKind::linear, ScheduleKind::smooth_endpoint, ScheduleKind::polynomial_smooth}) {
    EXPECT_NEAR(schedule_eval(kind, 0.0).f, 0.0, 1e-15);
    EXPECT_NEAR(schedule_eval(kind, 1.0).f, 1.0, 1e-15);
    EXPECT_EQ(parse_schedule_kind(to_string(kind)), kind);
    const double h = 1e-6;
    const double s = 0.37;
    const double fd = (schedule_eval(kind, s + h).f - schedule_eval(kind, s - h).f) / (2 * h);
    EXPECT_NEAR(schedule_eval(kind, s).df, fd, 1e-8);
  }
  const ScheduleValue end = schedule_eval(ScheduleKind::smooth_endpoint, 1.0);
  EXPECT_NEAR(end.df, 0.0, 1e-14);
  EXPECT_NEAR(end.d2f, 0.0, 1e-12);
  EXPECT_THROW(schedule_eval(ScheduleKind::linear, 1.5), std::out_of_range);
}

TEST(AdiabaticHamiltonian, Interpolates) {
  const AdiabaticSpec spec = universal_2local_preset(3, false, ScheduleKind::linear, 5.0);
  const AdiabaticHamiltonian ham(spec);
  EXPECT_LT(max_abs(ham.at(0.0) - ham.initial()), 1e-15);
  EXPECT_LT(max_abs(ham.at(1.0) - ham.final()), 1e-15);
  EXPECT_LT(max_abs(ham.at(0.25) - (0.75 * ham.initial() + 0.25 * ham.final())), 1e-14);
  EXPECT_LT(max_abs(h_ad(spec, 0.6) - ham.at(0.6)), 1e-14);
}

TEST(AdiabaticHamiltonian, EncodedPresetStaysInCode) {
  const AdiabaticSpec spec = universal_2local_preset(4, true, ScheduleKind::smooth_endpoint, 10.0);
  ASSERT_EQ(spec.subspace.cols(), 4);
  const Operator p = spec.subspace * spec.subspace.adjoint();
  const DecouplingGroup g = universal_group(4);
  for (double s : {0.0, 0.3, 1.0}) {
    const Operator h = h_ad(spec, s);
    EXPECT_LT(max_abs(h * p - p * h), 1e-13);
    for (const auto& e : g.elements()) EXPECT_LT(max_abs(commutator(h, to_dense(e))), 1e-13);
  }
}

TEST(UniversalTerms, DropsZeroCoefficients) {
  const std::vector<LocalField> fields{{0, Axis::z, [](double s) { return s; }}, {1, Axis::x, [](double) { return 1.0; }}};
  const std::vector<Coupling> couplings{{0, 1, Axis::z, [](double s) { return 2 * s; }}};
  EXPECT_EQ(universal_aqc_terms(2, fields, couplings, 0.0).size(), 1u);
  EXPECT_EQ(universal_aqc_terms(2, fields, couplings, 0.5).size(), 3u);
  const std::vector<LocalField> bad{{0, Axis::y, [](double) { return 1.0; }}};
  EXPECT_THROW(universal_aqc_terms(2, bad, {}, 0.5), std::invalid_argument);
}

TEST(LinearDecoherence, NormsAndSeeds) {
  const SystemBathSpec a = linear_decoherence(2, 2, 0.3, 0.8, 5);
  EXPECT_NEAR(op_norm(a.h_sb()), 0.3, 1e-12);
  EXPECT_NEAR(op_norm(a.h_bath), 0.8, 1e-12);
  EXPECT_EQ(a.couplings.size(), 6u);
  const SystemBathSpec b = linear_decoherence(2, 2, 0.3, 0.8, 5);
  EXPECT_EQ(max_abs(a.h_sb() - b.h_sb()), 0.0);
  const SystemBathSpec c = linear_decoherence(2, 2, 0.3, 0.8, 6);
  EXPECT_GT(max_abs(a.h_sb() - c.h_sb()), 1e-3);
  EXPECT_EQ(linear_decoherence(2, 1, 0.0, 1.0, 5).h_sb().norm(), 0.0);
}

TEST(Spectrum, TwoLevelGap) {
  AdiabaticSpec spec;
  spec.n = 1;
  spec.h0 = {{-1.0, PauliString::parse("X")}};
  spec.h1 = {{-1.0, PauliString::parse("Z")}};
  spec.schedule = ScheduleKind::linear;
  // E1 - E0 = 2 sqrt((1-s)^2 + s^2), smallest at s = 1/2.
  const SpectralReport r = min_gap(spec, 11, true);
  EXPECT_NEAR(r.argmin, 0.5, 1e-6);
  EXPECT_NEAR(r.min_gap, std::numbers::sqrt2, 1e-10);
  EXPECT_FALSE(r.degenerate);
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,E0,E1,gap");
}

TEST(Spectrum, DegenerateGroundLevel) {
  AdiabaticSpec spec;
  spec.n = 2;
  spec.h0 = {{-1.0, PauliString::parse("ZI")}};
  spec.h1 = {{-1.0, PauliString::parse("ZI")}};
  const SpectralReport r = min_gap(spec, 5, false);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.min_gap, 0.0);
}

TEST(PulseGenerator, ExponentiatesToPulse) {
  for (const char* s : {"XXXX", "-ZZ", "YIY"}) {
    const auto p = PauliString::parse(s);
    const double w = 0.03;
    EXPECT_LT(max_abs(expm_hermitian(pulse_generator(p, w), w) - to_dense(p)), 1e-12) << s;
  }
  EXPECT_THROW(pulse_generator(PauliString::parse("X"), 0.0), std::invalid_argument);
}

TEST(PulseSchedule, CycleReturnsToIdentityAndFramesMatchGroup) {
  const DecouplingGroup g = universal_group(4);
  const PulseSchedule sch = pdd_schedule(g, 0.1, 0.0, 3);
  EXPECT_EQ(sch.total_pulses(), 12u);
  EXPECT_NEAR(sch.total_time(), 1.2, 1e-15);
  // P_{K-1} ... P_0 = G_0 = I up to phase.
  Operator cycle = identity(16);
  for (const auto& p : sch.pulses()) cycle = to_dense(p) * cycle;
  EXPECT_NEAR(std::abs(cycle(0, 0)), 1.0, 1e-14);
  EXPECT_LT(max_abs(cycle - cycle(0, 0) * identity(16)), 1e-14);
  // Each suffix product P_{K-1} ... P_k is a group element up to phase.
  for (std::size_t k = 0; k < g.order(); ++k) {
    Operator suffix = identity(16);
    for (std::size_t j = k; j < g.order(); ++j) suffix = to_dense(sch.pulses()[j]) * suffix;
    bool found = false;
    for (const auto& e : g.elements()) {
      const Operator d = to_dense(e);
      found = found || std::abs((d.adjoint() * suffix).trace()) > 16.0 - 1e-9;
    }
    EXPECT_TRUE(found) << k;
  }
}

TEST(PulseSchedule, WindowsAndValidation) {
  const PulseSchedule sch = pdd_schedule(universal_group(2), 0.1, 0.02, 1);
  EXPECT_NEAR(sch.slot_duration(), 0.12, 1e-15);
  EXPECT_FALSE(sch.in_pulse_window(0.05));
  EXPECT_TRUE(sch.in_pulse_window(0.11));
  EXPECT_EQ(sch.slot_at(0.13), 1u);
  EXPECT_EQ(sch.slot_at(10.0), 3u);
  EXPECT_EQ(control_hamiltonian(sch, 0.05).norm(), 0.0);
  EXPECT_GT(control_hamiltonian(sch, 0.11).norm(), 0.0);
  EXPECT_THROW(pdd_schedule(universal_group(2), 0.0, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(pdd_schedule(universal_group(2), 0.1, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(pdd_schedule(universal_group(2), 0.1, 0.1, 1), ScheduleWarning);
}

TEST(PulseSchedule, Summary) {
  const PulseSchedule sch = pdd_schedule(universal_group(4), 0.25, 0.0, 2);
  const ScheduleSummary s = summarize(sch, 1.0);
  EXPECT_NEAR(s.cycle_time, 1.0, 1e-15);
  EXPECT_TRUE(s.magnus_convergent);
  EXPECT_FALSE(summarize(sch, 4.0).magnus_convergent);
}

TEST(Scaling, ExponentsAndParameters) {
  EXPECT_DOUBLE_EQ(runtime_exponent(1.0, AdiabaticRegime::twice_differentiable), 5.0);
  EXPECT_DOUBLE_EQ(runtime_exponent(1.0, AdiabaticRegime::smooth), 3.0);
  const ScalingRule rule = ScalingRule::from_critical_exponent(0.5, AdiabaticRegime::smooth, 1.5, 0.5, 1.0, 0.1);
  EXPECT_TRUE(rule.exponent_consistent());
  const ScaledParameters p = scaled_parameters(rule, 4.0, 4);
  EXPECT_NEAR(p.tau, std::pow(4.0, -(2.0 + 1.5)), 1e-15);
  EXPECT_NEAR(p.width, std::pow(4.0, -(4.0 + 2.0)) / 0.1, 1e-15);
  EXPECT_NEAR(p.total_time, 16.0, 1e-12);
  EXPECT_EQ(p.total_pulses % 4, 0u);
  ScalingRule bad = rule;
  bad.eps1 = 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace aqcs
