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

#include "aqcs/runner/experiment.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>
#include <fstream>

namespace aqcs {

namespace {

std::size_t dilate(std::size_t cycles, double dilation) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(cycles) * dilation)));
}

}  // namespace

AdiabaticSpec adiabatic_spec(const ExperimentConfig& cfg) {
  const ModelConfig& m = cfg.model;
  const double total = m.total_time.value_or(1.0);
  if (m.preset == "universal-2local") return universal_2local_preset(m.n, m.code, m.schedule, total, m.delta0);
  AdiabaticSpec spec;
  spec.n = m.n;
  spec.h0 = parse_terms(m.h0, m.n);
  spec.h1 = parse_terms(m.h1, m.n);
  spec.schedule = m.schedule;
  spec.total_time = total;
  spec.delta0 = m.delta0;
  return spec;
}

PreparedExperiment prepare(const ExperimentConfig& cfg) {
  cfg.validate();
  const ModelConfig& m = cfg.model;
  const bool universal = cfg.scaling.has_value() || cfg.protocol->group == "universal";
  const DecouplingGroup group = universal ? universal_group(m.n) : DecouplingGroup::trivial(m.n);
  const std::size_t k_order = group.order();

  double tau = 0.0;
  double width = 0.0;
  std::size_t cycles = 0;
  std::optional<ScalingRule> rule;
  if (cfg.protocol) {
    const ProtocolConfig& p = *cfg.protocol;
    tau = p.tau;
    width = p.width;
    if (p.cycles) {
      cycles = *p.cycles;
    } else {
      const double slots = *m.total_time / (tau + width) / static_cast<double>(k_order);
      cycles = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(slots)));
    }
  } else {
    const ScalingConfig& s = *cfg.scaling;
    const AdiabaticRegime regime =
        s.regime == "smooth" ? AdiabaticRegime::smooth : AdiabaticRegime::twice_differentiable;
    ScalingRule r = ScalingRule::from_critical_exponent(s.z, regime, s.eps1, s.eps2, m.delta0, m.coupling);
    if (s.zeta) r.zeta = *s.zeta;
    r.c_tau = s.c_tau;
    r.c_w = s.c_w;
    r.alpha = cfg.run.alpha;
    const ScaledParameters sp = scaled_parameters(r, static_cast<double>(m.n), k_order);
    tau = sp.tau;
    width = sp.width;
    cycles = sp.total_pulses / k_order;
    rule = r;
  }
  cycles = dilate(cycles, cfg.run.dilation);

  PulseSchedule schedule = pdd_schedule(group, tau, width, cycles);
  ProtectedModel model;
  model.adiabatic = adiabatic_spec(cfg);
  model.adiabatic.total_time = schedule.total_time();
  model.bath = linear_decoherence(m.n, m.n_bath, m.coupling, m.bath_norm, m.bath_seed);
  if (m.penalty > 0.0) {
    DecouplingGroup stabilizer = universal_group(m.n);
    if (!stabilizer.is_linear()) {
      throw ConfigError(fmt::format("model.penalty: the stabilizer sum is not a penalty for n = {} (needs n divisible by 4)", m.n));
    }
    model.penalty_group = std::move(stabilizer);
    model.penalty = m.penalty;
  }
  model.penalty_during_pulses = m.penalty_during_pulses;

  IntegratorConfig integrator;
  integrator.tolerance = cfg.run.tolerance;
  integrator.order = cfg.run.order;
  DensityMatrix bath_initial = bath_initial_state(model.bath, cfg.run.bath_initial);
  return PreparedExperiment{std::move(model), std::move(schedule), std::move(bath_initial), integrator, rule};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const PreparedExperiment prep = prepare(cfg);
  const ProtectedRun run = run_protected(prep.model, prep.schedule, prep.bath_initial, prep.integrator);
  ExperimentResult result;
  result.report = error_report(run, run_parameters(prep.schedule, prep.model.bath, run.beta, cfg.run.alpha));
  if (prep.rule) result.report.prediction = dd_error_prediction(*prep.rule, static_cast<double>(cfg.model.n));
  result.schedule = summarize(prep.schedule, cfg.model.coupling);
  result.csv = csv_header() + "\n" + csv_row(result.report) + "\n";
  result.json = to_json(result.report);
  return result;
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg, const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("AQC_SHIELD_OUT"); env && *env) return env;
  return cfg.output.directory;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << contents;
  if (!out) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

std::vector<std::filesystem::path> write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                                                 const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  if (cfg.output.csv) {
    written.push_back(dir / (cfg.output.prefix + ".csv"));
    write_file(written.back(), result.csv);
  }
  if (cfg.output.json) {
    written.push_back(dir / (cfg.output.prefix + ".json"));
    write_file(written.back(), result.json);
  }
  return written;
}

SpectralReport gap_scan(const ExperimentConfig& cfg, std::size_t grid_points) {
  cfg.validate();
  return min_gap(adiabatic_spec(cfg), grid_points, true);
}

}  // namespace aqcs
