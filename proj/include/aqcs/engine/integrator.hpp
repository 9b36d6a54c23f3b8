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

#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aqcs/core/dense.hpp"

namespace aqcs {

struct IntegratorConfig {
  /// Accepted local error per step, measured as the Frobenius norm of the
  /// difference between one full step and two half steps.
  double tolerance = 1e-10;
  /// Steps never exceed max_step_fraction * timescale. Callers set
  /// `timescale` to the time over which the Hamiltonian varies smoothly;
  /// the default leaves steps limited by the error control alone.
  double max_step_fraction = 0.05;
  double timescale = std::numeric_limits<double>::infinity();
  std::size_t max_steps = 2'000'000;
  /// 4: two-point Gauss-Legendre Magnus step with commutator correction.
  /// 2: exponential midpoint rule.
  int order = 4;

  void validate() const;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

using HamiltonianFn = std::function<Operator(double)>;

/// Interval on which H(t) is smooth, with an optional unitary applied
/// instantaneously at its end (ideal control pulses).
struct Slice {
  double begin = 0.0;
  double end = 0.0;
  std::optional<Operator> kick;
};

using Timeline = std::vector<Slice>;

/// Node times used inside each slice, including both endpoints. Replaying
/// the same nodes reproduces the same sequence of exponentials.
struct StepGrid {
  std::vector<std::vector<double>> nodes;

  std::size_t steps() const;
};

struct Propagation {
  Operator unitary;
  StepGrid grid;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_local_error = 0.0;
};

/// Time-ordered exp(-i int H dt) across the slices, in order. Slices must
/// be contiguous. Throws StepLimitExceeded and std::invalid_argument for a
/// non-Hermitian sample.
Propagation propagate(const HamiltonianFn& h, const Timeline& timeline, const IntegratorConfig& cfg);

/// Single smooth slice [0, T].
Propagation propagate(const HamiltonianFn& h, double total_time, const IntegratorConfig& cfg);

/// Recompute the propagator on a fixed grid from a previous run. `h` may
/// act on a different space than the original, as long as the kicks in
/// `timeline` (if any) match it.
Operator replay(const HamiltonianFn& h, const Timeline& timeline, const StepGrid& grid, int order);

/// The same slices with every kick removed.
Timeline without_kicks(const Timeline& timeline);

}  // namespace aqcs
