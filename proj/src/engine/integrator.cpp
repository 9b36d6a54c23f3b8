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

#include "aqcs/engine/integrator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace aqcs {

namespace {

constexpr double kGaussOffset = 0.28867513459481288225;  // sqrt(3) / 6
constexpr double kCommutatorWeight = 0.14433756729740644113;  // sqrt(3) / 12

Operator sample(const HamiltonianFn& h, double t) {
  Operator m = h(t);
  const double scale = 1.0 + (m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  if (!is_hermitian(m, 1e-10 * scale)) {
    throw std::invalid_argument(fmt::format("propagate: H(t) is not Hermitian at t = {}", t));
  }
  return m;
}

// One exponential step from t to t + dt.
Operator step(const HamiltonianFn& h, double t, double dt, int order) {
  Operator gen;
  if (order == 2) {
    gen = dt * sample(h, t + 0.5 * dt);
  } else {
    const Operator h1 = sample(h, t + (0.5 - kGaussOffset) * dt);
    const Operator h2 = sample(h, t + (0.5 + kGaussOffset) * dt);
    gen = (0.5 * dt) * (h1 + h2) + cplx(0.0, kCommutatorWeight * dt * dt) * commutator(h1, h2);
  }
  return expm_hermitian(hermitian_part(gen), 1.0, 1e-8);
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("IntegratorConfig: tolerance must be positive");
  if (!(max_step_fraction > 0.0)) throw std::invalid_argument("IntegratorConfig: max_step_fraction must be positive");
  if (!(timescale > 0.0)) throw std::invalid_argument("IntegratorConfig: timescale must be positive");
  if (order != 2 && order != 4) throw std::invalid_argument("IntegratorConfig: order must be 2 or 4");
  if (max_steps == 0) throw std::invalid_argument("IntegratorConfig: max_steps must be positive");
}

std::size_t StepGrid::steps() const {
  std::size_t total = 0;
  for (const auto& n : nodes) total += n.empty() ? 0 : n.size() - 1;
  return total;
}

Propagation propagate(const HamiltonianFn& h, const Timeline& timeline, const IntegratorConfig& cfg) {
  cfg.validate();
  if (timeline.empty()) throw std::invalid_argument("propagate: empty timeline");

  Propagation out;
  const Operator first = sample(h, timeline.front().begin);
  out.unitary = identity(static_cast<std::size_t>(first.rows()));
  const double max_step = cfg.max_step_fraction * cfg.timescale;
  const double exponent = 1.0 / (cfg.order + 1);
  double suggested = max_step;

  for (std::size_t i = 0; i < timeline.size(); ++i) {
    const Slice& slice = timeline[i];
    if (!(slice.end >= slice.begin)) throw std::invalid_argument("propagate: slice ends before it begins");
    if (i > 0 && std::abs(slice.begin - timeline[i - 1].end) > 1e-12 * (1.0 + std::abs(slice.begin))) {
      throw std::invalid_argument("propagate: slices are not contiguous");
    }
    std::vector<double> nodes{slice.begin};
    double t = slice.begin;
    while (t < slice.end) {
      double dt = std::min({suggested, max_step, slice.end - t});
      // Avoid leaving a sliver at the end of the slice.
      if (slice.end - (t + dt) < 1e-9 * dt) dt = slice.end - t;
      // Half steps are built from node differences, exactly as replay() sees them.
      const double t_next = (dt == slice.end - t) ? slice.end : t + dt;
      const double t_mid = t + 0.5 * (t_next - t);
      const Operator full = step(h, t, t_next - t, cfg.order);
      const Operator first_half = step(h, t, t_mid - t, cfg.order);
      const Operator second_half = step(h, t_mid, t_next - t_mid, cfg.order);
      const double err = (full - second_half * first_half).norm();
      const double factor = err > 0.0 ? std::clamp(0.9 * std::pow(cfg.tolerance / err, exponent), 0.2, 4.0) : 4.0;
      if (err <= cfg.tolerance) {
        out.unitary = second_half * Operator(first_half * out.unitary);
        nodes.push_back(t_mid);
        nodes.push_back(t_next);
        t = t_next;
        out.max_local_error = std::max(out.max_local_error, err);
        ++out.accepted;
        // Do not let a short final step shrink the next slice's first step.
        if (dt >= 0.5 * suggested) suggested = dt * factor;
      } else {
        ++out.rejected;
        suggested = dt * factor;
      }
      if (out.accepted + out.rejected > cfg.max_steps) {
        throw StepLimitExceeded(fmt::format("propagate: exceeded {} steps at t = {}", cfg.max_steps, t));
      }
    }
    if (slice.kick) out.unitary = (*slice.kick) * out.unitary;
    out.grid.nodes.push_back(std::move(nodes));
  }
  return out;
}

Propagation propagate(const HamiltonianFn& h, double total_time, const IntegratorConfig& cfg) {
  if (!(total_time >= 0.0)) throw std::invalid_argument("propagate: total time must be non-negative");
  return propagate(h, Timeline{Slice{0.0, total_time, std::nullopt}}, cfg);
}

Operator replay(const HamiltonianFn& h, const Timeline& timeline, const StepGrid& grid, int order) {
  if (timeline.empty() || grid.nodes.size() != timeline.size()) throw std::invalid_argument("replay: grid does not match timeline");
  Operator u = identity(static_cast<std::size_t>(sample(h, timeline.front().begin).rows()));
  for (std::size_t i = 0; i < timeline.size(); ++i) {
    const auto& nodes = grid.nodes[i];
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
      u = step(h, nodes[j], nodes[j + 1] - nodes[j], order) * u;
    }
    if (timeline[i].kick) u = (*timeline[i].kick) * u;
  }
  return u;
}

Timeline without_kicks(const Timeline& timeline) {
  Timeline out;
  out.reserve(timeline.size());
  for (const auto& s : timeline) out.push_back(Slice{s.begin, s.end, std::nullopt});
  return out;
}

}  // namespace aqcs
