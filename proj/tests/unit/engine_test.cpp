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

#include "aqcs/engine/integrator.hpp"
#include "aqcs/engine/runs.hpp"
#include "aqcs/metrics/metrics.hpp"
#include "aqcs/model/hamiltonians.hpp"
#include "aqcs/protocols/pdd.hpp"
#include "test_support.hpp"

namespace aqcs {
namespace {

using testing::max_abs;
using testing::random_hermitian;
using testing::random_state;

TEST(Integrator, ConstantHamiltonianMatchesExponential) {
  const Operator h = random_hermitian(8, 1);
  for (int order : {2, 4}) {
    IntegratorConfig cfg;
    cfg.order = order;
    const Propagation p = propagate([&](double) { return h; }, 1.3, cfg);
    EXPECT_LT((p.unitary - expm_hermitian(h, 1.3)).norm(), 1e-9) << order;
  }
}

TEST(Integrator, CommutingTimeDependence) {
  // H(t) = cos(t) A, so U(T) = exp(-i sin(T) A).
  const Operator a = random_hermitian(4, 2);
  const double total = 2.5;
  const Propagation p = propagate([&](double t) { return Operator(std::cos(t) * a); }, total, IntegratorConfig{});
  EXPECT_LT((p.unitary - expm_hermitian(a, std::sin(total))).norm(), 1e-9);
  EXPECT_TRUE(is_unitary(p.unitary, 1e-12));
}

TEST(Integrator, KicksAreAppliedAtSliceEnds) {
  const Operator h = random_hermitian(2, 3);
  const Operator x = to_dense(PauliString::parse("X"));
  const Timeline timeline{{0.0, 0.4, x}, {0.4, 1.0, std::nullopt}};
  const HamiltonianFn fn = [&](double) { return h; };
  const Operator expected = expm_hermitian(h, 0.6) * x * expm_hermitian(h, 0.4);
  const Propagation p = propagate(fn, timeline, IntegratorConfig{});
  EXPECT_LT((p.unitary - expected).norm(), 1e-9);
  const Operator bare = replay(fn, without_kicks(timeline), p.grid, 4);
  EXPECT_LT((bare - expm_hermitian(h, 1.0)).norm(), 1e-9);
}

TEST(Integrator, ReplayIsBitwiseIdentical) {
  const Operator a = random_hermitian(4, 4);
  const Operator b = random_hermitian(4, 5);
  const HamiltonianFn fn = [&](double t) { return Operator(a + std::sin(2.0 * t) * b); };
  const Timeline timeline{{0.0, 1.0, std::nullopt}, {1.0, 2.0, std::nullopt}};
  const Propagation p = propagate(fn, timeline, IntegratorConfig{});
  EXPECT_EQ(max_abs(replay(fn, timeline, p.grid, 4) - p.unitary), 0.0);
}

TEST(Integrator, Errors) {
  IntegratorConfig cfg;
  cfg.max_steps = 3;
  cfg.timescale = 1.0;
  const Operator h = random_hermitian(2, 6);
  EXPECT_THROW(propagate([&](double) { return h; }, 1.0, cfg), StepLimitExceeded);
  Operator skew = Operator::Zero(2, 2);
  skew(0, 1) = 1.0;
  EXPECT_THROW(propagate([&](double) { return skew; }, 1.0, IntegratorConfig{}), std::invalid_argument);
  IntegratorConfig bad;
  bad.order = 3;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(GroundState, PhaseConventionAndDegeneracy) {
  Operator h = Operator::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const StateVector g = ground_state(h, Operator());
  EXPECT_EQ(g(1), cplx(1.0));
  EXPECT_THROW(ground_state(identity(2), Operator()), DegenerateGroundState);
}

TEST(ClosedRun, SlowEvolutionStaysInGroundState) {
  const AdiabaticSpec spec = universal_2local_preset(2, false, ScheduleKind::smooth_endpoint, 20.0);
  const ClosedRun fast = run_closed_adiabatic(spec, 1.0);
  const ClosedRun slow = run_closed_adiabatic(spec, 4.0);
  EXPECT_NEAR(slow.total_time, 80.0, 1e-12);
  EXPECT_LT(slow.delta_ad, fast.delta_ad);
  EXPECT_LT(slow.delta_ad, 1e-2);
  EXPECT_THROW(run_closed_adiabatic(spec, 0.5), std::invalid_argument);
}

TEST(EffectiveHamiltonian, RecoversGeneratorAndIgnoresGlobalPhase) {
  const Operator g = 0.05 * random_hermitian(4, 7);
  const Operator traceless = g - (g.trace() / 4.0) * identity(4);
  const Operator u = expm_hermitian(g, 3.0);
  const EffectiveHamiltonian e = effective_hamiltonian(u, 3.0);
  // Equal to the generator up to a multiple of the identity.
  const Operator diff = e.h_eff - traceless;
  EXPECT_LT(max_abs(diff - diff(0, 0) * identity(4)), 1e-12);
  EXPECT_LT(max_abs(expm_hermitian(e.h_eff, 3.0) - u * std::polar(1.0, std::arg(u.trace()) * -1.0)), 1e-12);
  EXPECT_NEAR(e.phi, 3.0 * op_norm(e.h_eff), 1e-12);
  EXPECT_NEAR(effective_hamiltonian(u * std::polar(1.0, 2.0), 3.0).phi, e.phi, 1e-12);
}

TEST(MagnusFirstOrder, VanishesForUniversalGroup) {
  const SystemBathSpec bath = linear_decoherence(4, 1, 1.0, 1.0, 2);
  EXPECT_LT(op_norm(magnus_first_order(universal_group(4), bath.h_sb(), 2)), 1e-12);
  EXPECT_NEAR(op_norm(magnus_first_order(DecouplingGroup::trivial(4), bath.h_sb(), 2)), 1.0, 1e-12);
}

ProtectedModel small_model(double coupling) {
  ProtectedModel m;
  m.adiabatic = universal_2local_preset(4, true, ScheduleKind::smooth_endpoint, 2.0);
  m.bath = linear_decoherence(4, 1, coupling, 1.0, 3);
  return m;
}

ErrorReport report_for(const ProtectedModel& m, const PulseSchedule& sch) {
  const ProtectedRun run = run_protected(m, sch, bath_initial_state(m.bath, BathInitialState::maximally_mixed));
  return error_report(run, run_parameters(sch, m.bath, run.beta));
}

TEST(ProtectedRun, UncoupledRunHasNoDecouplingError) {
  const ProtectedModel m = small_model(0.0);
  const PulseSchedule sch = pdd_schedule(universal_group(4), 0.04, 0.005, 11);
  const ProtectedRun run = run_protected(m, sch, bath_initial_state(m.bath, BathInitialState::maximally_mixed));
  const ErrorReport rep = error_report(run, run_parameters(sch, m.bath, run.beta));
  EXPECT_EQ(rep.d_D, 0.0);
  EXPECT_LT(trace_distance(run.coupled.rho_system, DensityMatrix::pure(run.psi_closed)), 1e-9);
  EXPECT_LT(rep.phi, 1e-9);
  EXPECT_TRUE(rep.all_passed());
}

TEST(ProtectedRun, DecouplingReducesError) {
  const ProtectedModel m = small_model(0.2);
  const ErrorReport free_run = report_for(m, pdd_schedule(DecouplingGroup::trivial(4), 0.05, 0.0, 40));
  const ErrorReport protected_run = report_for(m, pdd_schedule(universal_group(4), 0.05, 0.0, 10));
  EXPECT_NEAR(protected_run.parameters.total_time, 2.0, 1e-12);
  EXPECT_LT(protected_run.d_D, 0.2 * free_run.d_D);
  EXPECT_LT(protected_run.phi, free_run.phi);
  EXPECT_TRUE(protected_run.verdict("eq3").passed);
  EXPECT_TRUE(protected_run.verdict("triangle").passed);
  EXPECT_TRUE(protected_run.verdict("monotonicity").passed);
}

TEST(ProtectedRun, RejectsMismatchedInputs) {
  const ProtectedModel m = small_model(0.1);
  const PulseSchedule wrong = pdd_schedule(universal_group(2), 0.05, 0.0, 1);
  EXPECT_THROW(run_protected(m, wrong, DensityMatrix::maximally_mixed(2)), std::invalid_argument);
  const PulseSchedule sch = pdd_schedule(universal_group(4), 0.05, 0.0, 1);
  EXPECT_THROW(run_protected(m, sch, DensityMatrix::maximally_mixed(4)), std::invalid_argument);
}

}  // namespace
}  // namespace aqcs
