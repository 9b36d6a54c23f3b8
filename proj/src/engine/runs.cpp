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

#include "aqcs/engine/runs.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace aqcs {

namespace {

constexpr double kDegeneracy = 1e-12;
constexpr std::size_t kBetaGrid = 65;

// sqrt(1 - |<a|b>|^2) for unit vectors, as the norm of the part of a
// orthogonal to b, which keeps full relative precision for tiny distances.
double pure_distance(const StateVector& a, const StateVector& b) {
  return std::min(1.0, (a - b * b.dot(a)).norm());
}

double unitarity_error(const Operator& u) {
  return (u.adjoint() * u - Operator::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

std::pair<double, double> spectral_range(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(0), es.eigenvalues()(es.eigenvalues().size() - 1)};
}

}  // namespace

StateVector ground_state(const Operator& h, const Operator& subspace) {
  const bool restricted = subspace.size() != 0;
  if (restricted && subspace.rows() != h.rows()) throw std::invalid_argument("ground_state: subspace dimension mismatch");
  const Operator reduced = restricted ? hermitian_part(subspace.adjoint() * h * subspace) : hermitian_part(h);
  Eigen::SelfAdjointEigenSolver<Operator> es(reduced);
  if (es.info() != Eigen::Success) throw std::runtime_error("ground_state: eigensolver failed");
  const auto& e = es.eigenvalues();
  if (e.size() > 1 && e(1) - e(0) < kDegeneracy) {
    throw DegenerateGroundState(fmt::format("ground_state: lowest levels {} and {} are degenerate", e(0), e(1)));
  }
  StateVector psi = restricted ? StateVector(subspace * es.eigenvectors().col(0)) : StateVector(es.eigenvectors().col(0));
  psi.normalize();
  // First index whose magnitude is within roundoff of the maximum.
  const double peak = psi.cwiseAbs().maxCoeff();
  Eigen::Index pick = 0;
  while (std::abs(psi(pick)) < peak * (1.0 - 1e-9)) ++pick;
  psi *= std::conj(psi(pick)) / std::abs(psi(pick));
  psi(pick) = std::abs(psi(pick));
  return psi;
}

StateVector instantaneous_ground_state(const AdiabaticSpec& spec, double s) {
  return ground_state(h_ad(spec, s), spec.subspace);
}

ClosedRun run_closed_adiabatic(const AdiabaticSpec& spec, double dilation, IntegratorConfig cfg) {
  if (!(dilation >= 1.0)) throw std::invalid_argument("run_closed_adiabatic: dilation must be at least 1");
  if (!(spec.total_time > 0.0)) throw std::invalid_argument("run_closed_adiabatic: total time must be positive");
  const AdiabaticHamiltonian ham(spec);
  ClosedRun out;
  out.total_time = dilation * spec.total_time;
  out.psi_initial = ground_state(ham.initial(), spec.subspace);
  out.ground_final = ground_state(ham.final(), spec.subspace);
  const double total = out.total_time;
  cfg.timescale = std::min(cfg.timescale, total);
  const HamiltonianFn h = [&](double t) { return ham.at(std::clamp(t / total, 0.0, 1.0)); };
  const Propagation prop = propagate(h, total, cfg);
  out.psi_final = prop.unitary * out.psi_initial;
  out.delta_ad = pure_distance(out.psi_final, out.ground_final);
  out.steps = prop.accepted;
  return out;
}

DensityMatrix bath_initial_state(const SystemBathSpec& bath, BathInitialState kind) {
  if (kind == BathInitialState::maximally_mixed) return DensityMatrix::maximally_mixed(bath.bath_dim());
  return DensityMatrix::pure(ground_state(bath.h_bath, Operator()));
}

Timeline schedule_timeline(const PulseSchedule& schedule, std::size_t bath_dim) {
  Timeline timeline;
  const std::size_t slots = schedule.total_pulses();
  const double slot = schedule.slot_duration();
  const Operator bath_identity = identity(bath_dim);
  std::vector<Operator> kicks;
  if (schedule.ideal()) {
    for (const auto& p : schedule.pulses()) kicks.push_back(kron(to_dense(p), bath_identity));
  }
  for (std::size_t l = 0; l < slots; ++l) {
    const double begin = static_cast<double>(l) * slot;
    const double end = l + 1 == slots ? schedule.total_time() : static_cast<double>(l + 1) * slot;
    const std::size_t k = l % schedule.pulses_per_cycle();
    if (schedule.ideal()) {
      timeline.push_back(Slice{begin, end, kicks[k]});
    } else {
      const double edge = begin + schedule.tau();
      timeline.push_back(Slice{begin, edge, std::nullopt});
      timeline.push_back(Slice{edge, end, std::nullopt});
    }
  }
  return timeline;
}

ProtectedRun run_protected(const ProtectedModel& model, const PulseSchedule& schedule,
                           const DensityMatrix& bath_initial, IntegratorConfig cfg) {
  const AdiabaticSpec& spec = model.adiabatic;
  const SystemBathSpec& bath = model.bath;
  if (bath.n != spec.n) throw std::invalid_argument("run_protected: bath coupling acts on a different system size");
  if (schedule.group().num_qubits() != spec.n) {
    throw std::invalid_argument("run_protected: schedule and model have different qubit counts");
  }
  if (bath_initial.dim() != bath.bath_dim()) throw std::invalid_argument("run_protected: bath state dimension mismatch");

  const AdiabaticHamiltonian ham(spec);
  const auto ds = static_cast<std::size_t>(ham.dim());
  const std::size_t db = bath.bath_dim();
  const double total = schedule.total_time();

  Operator h_p = Operator::Zero(static_cast<Eigen::Index>(ds), static_cast<Eigen::Index>(ds));
  if (model.penalty_group && model.penalty != 0.0) {
    if (model.penalty_group->num_qubits() != spec.n) throw std::invalid_argument("run_protected: penalty group size mismatch");
    h_p = penalty_hamiltonian(*model.penalty_group, model.penalty);
  }

  ProtectedRun out;
  out.system_dim = ds;
  out.bath_dim = db;
  out.bath_initial = bath_initial;
  out.psi_initial = ground_state(ham.initial(), spec.subspace);
  if (spec.subspace.size() != 0) {
    const StateVector outside = out.psi_initial - spec.subspace * (spec.subspace.adjoint() * out.psi_initial);
    if (outside.norm() > 1e-10) throw std::invalid_argument("run_protected: initial state leaves the code space");
  }
  out.ground_final = ground_state(ham.final(), spec.subspace);

  const Operator bath_identity = identity(db);
  const Operator system_identity = identity(ds);
  const Operator h_b = kron(system_identity, bath.h_bath);
  const Operator h_sb = bath.h_sb();
  const Operator h_p_joint = kron(h_p, bath_identity);
  std::vector<Operator> pulses_joint;
  for (const auto& g : schedule.generators()) pulses_joint.push_back(kron(g, bath_identity));

  auto penalty_on = [&](double t) { return model.penalty_during_pulses || !schedule.in_pulse_window(t); };
  auto s_of = [&](double t) { return std::clamp(t / total, 0.0, 1.0); };
  auto joint = [&](double t, bool coupled) {
    Operator h = kron(ham.at(s_of(t)), bath_identity) + h_b;
    if (coupled) h += h_sb;
    if (penalty_on(t)) h += h_p_joint;
    if (!pulses_joint.empty() && schedule.in_pulse_window(t)) {
      h += pulses_joint[schedule.slot_at(t) % schedule.pulses_per_cycle()];
    }
    return h;
  };
  const HamiltonianFn h_coupled = [&](double t) { return joint(t, true); };
  const HamiltonianFn h_uncoupled = [&](double t) { return joint(t, false); };
  const HamiltonianFn h_system = [&](double t) {
    Operator h = ham.at(s_of(t));
    if (penalty_on(t)) h += h_p;
    return h;
  };

  cfg.timescale = std::min(cfg.timescale, total);
  const Timeline timeline = schedule_timeline(schedule, db);
  const Propagation prop = propagate(h_coupled, timeline, cfg);
  const Operator u_uncoupled = replay(h_uncoupled, timeline, prop.grid, cfg.order);
  out.u_ad = replay(h_system, without_kicks(timeline), prop.grid, cfg.order);
  out.u_bath = expm_hermitian(bath.h_bath, total);
  out.psi_closed = out.u_ad * out.psi_initial;
  out.delta_ad = pure_distance(out.psi_closed, out.ground_final);
  out.bath_final = bath_initial.evolved(out.u_bath);

  const DensityMatrix rho0(kron(projector(out.psi_initial), bath_initial.matrix()), 1e-8);
  const std::array<std::size_t, 2> dims{ds, db};
  const std::array<std::size_t, 1> keep{0};

  auto finish = [&](const Operator& u, RunArtifacts& art) {
    art.u_total = u;
    art.total_time = total;
    art.rho_final = rho0.evolved(u);
    art.rho_system = partial_trace(art.rho_final, dims, keep);
    art.u_interaction = interaction_frame(u, out.u_ad, out.u_bath);
    art.diagnostics.accepted_steps = prop.accepted;
    art.diagnostics.rejected_steps = prop.rejected;
    art.diagnostics.max_local_error = prop.max_local_error;
    art.diagnostics.unitarity_error = unitarity_error(u);
    try {
      auto eff = effective_hamiltonian(art.u_interaction, total);
      art.h_eff = std::move(eff.h_eff);
      art.phi = eff.phi;
    } catch (const BranchError&) {
      art.diagnostics.branch_ok = false;
      art.phi = std::numeric_limits<double>::quiet_NaN();
    }
  };
  finish(prop.unitary, out.coupled);
  finish(u_uncoupled, out.uncoupled);

  // Spectrum of A x I + I x B is every sum of eigenvalues.
  const auto [b_lo, b_hi] = spectral_range(bath.h_bath);
  for (std::size_t i = 0; i < kBetaGrid; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(kBetaGrid - 1);
    const auto [a_lo, a_hi] = spectral_range(ham.at(s) + h_p);
    out.beta = std::max({out.beta, std::abs(a_lo + b_lo), std::abs(a_hi + b_hi)});
  }
  return out;
}

Operator interaction_frame(const Operator& u_total, const Operator& u_ad, const Operator& u_bath) {
  if (u_ad.rows() * u_bath.rows() != u_total.rows()) throw std::invalid_argument("interaction_frame: dimension mismatch");
  return kron(u_ad, u_bath).adjoint() * u_total;
}

EffectiveHamiltonian effective_hamiltonian(const Operator& u_interaction, double total_time) {
  if (!(total_time > 0.0)) throw std::invalid_argument("effective_hamiltonian: total time must be positive");
  Operator u = u_interaction;
  const cplx tr = u.trace();
  if (std::abs(tr) > kDefaultTolerance) u *= std::conj(tr) / std::abs(tr);
  const Operator h = logm_unitary(u, 1e-8);
  EffectiveHamiltonian out;
  out.phi = op_norm(h);
  out.h_eff = h / total_time;
  return out;
}

Operator magnus_first_order(const DecouplingGroup& g, const Operator& h_sb, std::size_t bath_dim) {
  const auto expected = static_cast<Eigen::Index>((std::size_t{1} << g.num_qubits()) * bath_dim);
  if (h_sb.rows() != expected || h_sb.cols() != expected) {
    throw std::invalid_argument("magnus_first_order: operator does not match group and bath dimensions");
  }
  return group_average(g, h_sb, bath_dim);
}

}  // namespace aqcs
