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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aqcs/engine/runs.hpp"
#include "aqcs/metrics/metrics.hpp"
#include "aqcs/model/spectrum.hpp"
#include "aqcs/runner/config.hpp"

namespace aqcs {

/// Exit codes shared by every subcommand.
enum class ExitCode : int { ok = 0, error = 1, bound_violated = 2 };

/// Everything needed to run one configuration.
struct PreparedExperiment {
  ProtectedModel model;
  PulseSchedule schedule;
  DensityMatrix bath_initial;
  IntegratorConfig integrator;
  std::optional<ScalingRule> rule;
};

/// The adiabatic model of a config, with the runtime left at model.total_time
/// (or 1 when absent).
AdiabaticSpec adiabatic_spec(const ExperimentConfig& cfg);

PreparedExperiment prepare(const ExperimentConfig& cfg);

struct ExperimentResult {
  ErrorReport report;
  ScheduleSummary schedule;
  std::string csv;
  std::string json;
};

/// Deterministic for a fixed config.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Output directory: --out-dir flag, then AQC_SHIELD_OUT, then the config.
std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg, const std::optional<std::string>& flag);

/// Writes <prefix>.csv (header plus one row) and <prefix>.json as selected.
std::vector<std::filesystem::path> write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                                                 const std::filesystem::path& dir);

/// Spectrum of the config's adiabatic model on an s grid.
SpectralReport gap_scan(const ExperimentConfig& cfg, std::size_t grid_points = 101);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace aqcs
