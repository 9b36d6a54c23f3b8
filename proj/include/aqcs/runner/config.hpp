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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqcs/core/pauli.hpp"
#include "aqcs/engine/runs.hpp"
#include "aqcs/model/schedule.hpp"
#include "aqcs/protocols/pdd.hpp"

namespace aqcs {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ModelConfig {
  /// "universal-2local" or "custom" (explicit h0/h1 term lists).
  std::string preset = "universal-2local";
  std::size_t n = 4;
  std::size_t n_bath = 1;
  bool code = true;
  /// "coef*LETTERS; coef*LETTERS; ...", used by the custom preset.
  std::string h0;
  std::string h1;
  ScheduleKind schedule = ScheduleKind::smooth_endpoint;
  double delta0 = 1.0;
  /// Requested runtime; optional when the protocol fixes the cycle count.
  std::optional<double> total_time;
  double coupling = 0.1;
  double bath_norm = 1.0;
  double penalty = 0.0;
  bool penalty_during_pulses = true;
  std::uint64_t bath_seed = 1;

  bool operator==(const ModelConfig&) const = default;
};

struct ProtocolConfig {
  /// "universal" or "none".
  std::string group = "universal";
  double tau = 0.1;
  double width = 0.0;
  /// Derived from model.total_time when absent.
  std::optional<std::size_t> cycles;

  bool operator==(const ProtocolConfig&) const = default;
};

struct ScalingConfig {
  double z = 0.0;
  /// "twice-differentiable" or "smooth"; ignored when zeta is given.
  std::string regime = "twice-differentiable";
  std::optional<double> zeta;
  double eps1 = 1.5;
  double eps2 = 0.5;
  double c_tau = 1.0;
  double c_w = 1.0;

  bool operator==(const ScalingConfig&) const = default;
};

struct RunConfig {
  double dilation = 1.0;
  double tolerance = 1e-10;
  int order = 4;
  BathInitialState bath_initial = BathInitialState::maximally_mixed;
  double alpha = 1.0;

  bool operator==(const RunConfig&) const = default;
};

struct OutputConfig {
  std::string directory = "out";
  std::string prefix = "run";
  bool csv = true;
  bool json = true;

  bool operator==(const OutputConfig&) const = default;
};

struct SweepAxis {
  /// "section.key", e.g. "protocol.tau".
  std::string path;
  std::vector<std::string> values;

  bool operator==(const SweepAxis&) const = default;
};

struct ExperimentConfig {
  ModelConfig model;
  /// Exactly one of protocol and scaling is set.
  std::optional<ProtocolConfig> protocol;
  std::optional<ScalingConfig> scaling;
  RunConfig run;
  OutputConfig output;
  /// Present only in sweep files.
  std::vector<SweepAxis> sweep;

  bool operator==(const ExperimentConfig&) const = default;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parse "coef*LETTERS; ..." into terms on n qubits.
TermList parse_terms(const std::string& text, std::size_t n);
std::string format_terms(const TermList& terms);

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// INI text that parses back to an equal config.
std::string serialize(const ExperimentConfig& cfg);

/// Set a numeric or enumerated field by "section.key" path from its text
/// form. Throws ConfigError for unknown paths or bad values.
void set_field(ExperimentConfig& cfg, const std::string& path, const std::string& value);

}  // namespace aqcs
