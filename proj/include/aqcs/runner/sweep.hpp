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
#include <optional>
#include <string>
#include <vector>

#include "aqcs/runner/config.hpp"
#include "aqcs/runner/experiment.hpp"

namespace aqcs {

struct SweepSpec {
  ExperimentConfig base;
  std::vector<SweepAxis> axes;

  /// Base config with the sweep axes taken out of it.
  static SweepSpec from_config(const ExperimentConfig& cfg);

  /// Product of the axis lengths. Throws ConfigError for an empty axis.
  std::size_t size() const;
  /// Point `index` of the cross product; the first axis varies slowest.
  ExperimentConfig point(std::size_t index) const;
  std::vector<std::string> values_at(std::size_t index) const;
};

struct SweepPoint {
  std::size_t index = 0;
  std::vector<std::string> values;
  /// "ok", "bound_violated:<names>" or "error:<message>".
  std::string status;
  std::optional<ErrorReport> report;
};

struct SweepResult {
  std::vector<SweepPoint> points;

  /// Header "index,<axis paths>,<metric columns>,status", rows by index.
  std::string csv(const SweepSpec& spec) const;
  ExitCode exit_code() const;
};

/// Runs every point on `parallelism` worker threads. Rows come back ordered
/// by index whatever the execution order. Failed points are recorded.
SweepResult run_sweep(const SweepSpec& spec, std::size_t parallelism,
                      const std::function<void(const SweepPoint&)>& on_point = {});

}  // namespace aqcs
