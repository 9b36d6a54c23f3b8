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

#include "aqcs/protocols/pdd.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace aqcs {

Operator pulse_generator(const PauliString& p, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("pulse_generator: width must be positive");
  if (p.phase_exponent() % 2 != 0) {
    throw std::invalid_argument("pulse_generator: " + p.str() + " squares to -I, not an involution");
  }
  const auto dim = std::size_t{1} << p.size();
  return (std::numbers::pi / (2.0 * width)) * (identity(dim) - to_dense(p));
}

PulseSchedule::PulseSchedule(DecouplingGroup group, double tau, double width, std::size_t cycles)
    : group_(std::move(group)), tau_(tau), width_(width), cycles_(cycles) {
  if (!(tau > 0.0)) throw std::invalid_argument("PulseSchedule: tau must be positive");
  if (width < 0.0) throw std::invalid_argument("PulseSchedule: width must be non-negative");
  if (cycles == 0) throw std::invalid_argument("PulseSchedule: need at least one cycle");
  const std::size_t k_order = group_.order();
  // G_k = G_{k+1} P_k with G_K = I, hence P_k = G_{k+1}^dagger G_k.
  for (std::size_t k = 0; k < k_order; ++k) {
    const PauliString next = k + 1 < k_order ? group_[k + 1] : PauliString(group_.num_qubits());
    pulses_.push_back((next.adjoint() * group_[k]).canonical());
  }
  if (width_ > 0.0) {
    for (const auto& p : pulses_) generators_.push_back(pulse_generator(p, width_));
  }
}

std::size_t PulseSchedule::slot_at(double t) const {
  const double raw = std::floor(t / slot_duration());
  if (raw <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(raw), total_pulses() - 1);
}

bool PulseSchedule::in_pulse_window(double t) const {
  if (width_ == 0.0) return false;
  const double local = t - static_cast<double>(slot_at(t)) * slot_duration();
  return local >= tau_;
}

PulseSchedule pdd_schedule(const DecouplingGroup& group, double tau, double width, std::size_t cycles) {
  if (width > 0.0 && width >= tau) {
    throw ScheduleWarning(fmt::format("pdd_schedule: pulse width {} is not smaller than the interval {}", width, tau));
  }
  return PulseSchedule(group, tau, width, cycles);
}

Operator control_hamiltonian(const PulseSchedule& schedule, double t) {
  const double total = schedule.total_time();
  if (t < 0.0 || t > total * (1.0 + 1e-12)) {
    throw std::out_of_range(fmt::format("control_hamiltonian: t = {} outside [0, {}]", t, total));
  }
  const auto dim = std::size_t{1} << schedule.group().num_qubits();
  if (!schedule.in_pulse_window(t)) return Operator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  return schedule.generators()[schedule.slot_at(t) % schedule.pulses_per_cycle()];
}

ScheduleSummary summarize(const PulseSchedule& schedule, double coupling_strength) {
  ScheduleSummary s;
  s.pulses_per_cycle = schedule.pulses_per_cycle();
  s.tau = schedule.tau();
  s.width = schedule.width();
  s.total_pulses = schedule.total_pulses();
  s.total_time = schedule.total_time();
  s.cycle_time = schedule.cycle_time();
  s.j_cycle_time = coupling_strength * s.cycle_time;
  s.magnus_convergent = s.j_cycle_time < std::numbers::pi;
  return s;
}

std::string to_text(const ScheduleSummary& s) {
  return fmt::format("K = {}\ntau = {:.17g}\nw = {:.17g}\nL = {}\nT = {:.17g}\nT_c = {:.17g}\nJT_c = {:.17g}\nmagnus_convergent = {}\n",
                     s.pulses_per_cycle, s.tau, s.width, s.total_pulses, s.total_time, s.cycle_time, s.j_cycle_time,
                     s.magnus_convergent ? "yes" : "no");
}

double runtime_exponent(double z, AdiabaticRegime regime) {
  return regime == AdiabaticRegime::twice_differentiable ? 3.0 * z + 2.0 : 2.0 * z + 1.0;
}

ScalingRule ScalingRule::from_critical_exponent(double z, AdiabaticRegime regime, double eps1, double eps2,
                                                double delta0, double coupling_strength) {
  ScalingRule rule;
  rule.z = z;
  rule.zeta = runtime_exponent(z, regime);
  rule.eps1 = eps1;
  rule.eps2 = eps2;
  rule.delta0 = delta0;
  rule.coupling_strength = coupling_strength;
  rule.validate();
  return rule;
}

void ScalingRule::validate() const {
  if (!(eps1 > 1.0)) throw std::invalid_argument("ScalingRule: eps1 must exceed 1");
  if (!(eps2 > 0.0)) throw std::invalid_argument("ScalingRule: eps2 must be positive");
  if (!(delta0 > 0.0) || !(coupling_strength > 0.0)) {
    throw std::invalid_argument("ScalingRule: delta0 and J must be positive");
  }
  if (!(c_tau > 0.0) || !(c_w > 0.0)) throw std::invalid_argument("ScalingRule: prefactors must be positive");
}

bool ScalingRule::exponent_consistent() const {
  return std::abs(zeta - (3.0 * z + 2.0)) < 1e-12 || std::abs(zeta - (2.0 * z + 1.0)) < 1e-12;
}

ScaledParameters scaled_parameters(const ScalingRule& rule, double n, std::size_t pulses_per_cycle) {
  rule.validate();
  if (n < 2.0) throw std::invalid_argument("scaled_parameters: n must be at least 2");
  if (pulses_per_cycle == 0) throw std::invalid_argument("scaled_parameters: K must be positive");
  ScaledParameters p;
  p.tau = rule.c_tau * std::pow(n, -(rule.zeta + rule.eps1)) / rule.delta0;
  p.width = rule.c_w * std::pow(n, -(2.0 * rule.zeta + rule.eps1 + rule.eps2)) / rule.coupling_strength;
  p.total_time = std::pow(n, rule.zeta) / rule.delta0;
  const auto slots = static_cast<std::size_t>(std::max(1.0, std::round(p.total_time / (p.tau + p.width))));
  p.total_pulses = ((slots + pulses_per_cycle - 1) / pulses_per_cycle) * pulses_per_cycle;
  return p;
}

}  // namespace aqcs
