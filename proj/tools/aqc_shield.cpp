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

// aqc-shield: simulate, sweep and check dynamically protected adiabatic runs.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <string>

#include "aqcs/codes/codes.hpp"
#include "aqcs/runner/config.hpp"
#include "aqcs/runner/experiment.hpp"
#include "aqcs/runner/sweep.hpp"
#include "aqcs/runner/verification.hpp"

namespace {

using aqcs::ExitCode;

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<double> tolerance;
  std::size_t parallel = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Bath seed, overrides model.bath_seed");
  cmd->add_option("--out-dir", flags.out_dir, "Output directory, overrides AQC_SHIELD_OUT and the config");
  cmd->add_option("--tolerance", flags.tolerance, "Integrator local tolerance, overrides run.tolerance");
  cmd->add_option("--parallel", flags.parallel, "Worker threads for sweeps")->check(CLI::PositiveNumber);
}

aqcs::ExperimentConfig load(const std::string& path, const CommonFlags& flags) {
  aqcs::ExperimentConfig cfg = aqcs::load_config(path);
  if (flags.seed) cfg.model.bath_seed = *flags.seed;
  if (flags.tolerance) cfg.run.tolerance = *flags.tolerance;
  cfg.validate();
  return cfg;
}

void log(const std::string& msg) { fmt::print(stderr, "aqc-shield: {}\n", msg); }

int simulate(const std::string& path, const CommonFlags& flags) {
  const aqcs::ExperimentConfig cfg = load(path, flags);
  if (!cfg.sweep.empty()) log("ignoring the [sweep] section; use the sweep subcommand to run it");
  const aqcs::ExperimentResult result = aqcs::run_experiment(cfg);
  for (const auto& file : aqcs::write_outputs(result, cfg, aqcs::resolve_output_dir(cfg, flags.out_dir))) {
    log("wrote " + file.string());
  }
  const auto& r = result.report;
  log(fmt::format("d_D = {:.6e}, delta_S = {:.6e}, delta_ad = {:.6e}, Phi = {:.6e}", r.d_D, r.delta_S, r.delta_ad, r.phi));
  if (!result.schedule.magnus_convergent) log("warning: J T_c >= pi, the cycle Magnus series need not converge");
  for (const auto& v : r.verdicts) {
    if (v.checked && !v.passed) log(fmt::format("bound violated: {} (slack {:.3e})", v.name, v.slack));
  }
  return static_cast<int>(r.all_passed() ? ExitCode::ok : ExitCode::bound_violated);
}

int sweep(const std::string& path, const CommonFlags& flags) {
  const aqcs::ExperimentConfig cfg = load(path, flags);
  if (cfg.sweep.empty()) throw aqcs::ConfigError(path + ": no [sweep] section");
  const aqcs::SweepSpec spec = aqcs::SweepSpec::from_config(cfg);
  const std::size_t total = spec.size();
  log(fmt::format("{} points on {} worker(s)", total, flags.parallel));
  const aqcs::SweepResult result = aqcs::run_sweep(spec, flags.parallel, [&](const aqcs::SweepPoint& p) {
    log(fmt::format("point {}/{}: {}", p.index + 1, total, p.status));
  });
  const auto file = aqcs::resolve_output_dir(cfg, flags.out_dir) / (cfg.output.prefix + "_sweep.csv");
  aqcs::write_file(file, result.csv(spec));
  log("wrote " + file.string());
  return static_cast<int>(result.exit_code());
}

int gap(const std::string& path, const CommonFlags& flags) {
  const aqcs::ExperimentConfig cfg = load(path, flags);
  const aqcs::SpectralReport report = aqcs::gap_scan(cfg);
  const auto file = aqcs::resolve_output_dir(cfg, flags.out_dir) / (cfg.output.prefix + "_gap.csv");
  aqcs::write_file(file, aqcs::to_csv(report));
  log("wrote " + file.string());
  log(fmt::format("minimum gap {:.12g} at s = {:.12g}{}", report.min_gap, report.argmin,
                  report.degenerate ? " (degenerate)" : ""));
  return 0;
}

int code(std::size_t n) {
  const aqcs::UniversalCode uc = aqcs::code_from_universal_group(n);
  fmt::print("{}", aqcs::describe_codewords(uc.code));
  fmt::print("{}", aqcs::describe_logicals(uc.logicals));
  return 0;
}

int verify(const CommonFlags& flags) {
  aqcs::VerificationOptions options;
  options.parallelism = flags.parallel;
  options.log = log;
  bool ok = true;
  for (const auto& r : aqcs::invariant_checks(options)) {
    fmt::print("{}\n", aqcs::format_check(r));
    ok = ok && r.passed;
  }
  aqcs::AcceptanceSuite suite(options);
  for (const auto& r : suite.run_all()) {
    fmt::print("{}\n", aqcs::format_check(r));
    std::fflush(stdout);
    ok = ok && !aqcs::counts_as_failure(r);
  }
  return static_cast<int>(ok ? ExitCode::ok : ExitCode::error);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic quantum computation under dynamical decoupling"};
  app.require_subcommand(1);
  CommonFlags flags;
  std::string config;
  std::size_t code_n = 4;

  auto* sim = app.add_subcommand("simulate", "Run one configuration and write CSV/JSON results");
  sim->add_option("config", config, "Configuration file")->required();
  add_common(sim, flags);
  auto* swp = app.add_subcommand("sweep", "Run the [sweep] cross product of a configuration");
  swp->add_option("config", config, "Configuration file")->required();
  add_common(swp, flags);
  auto* gp = app.add_subcommand("gap", "Spectrum and minimum gap of the adiabatic Hamiltonian");
  gp->add_option("config", config, "Configuration file")->required();
  add_common(gp, flags);
  auto* cd = app.add_subcommand("code", "Print codewords and logical operators of the universal-group code");
  cd->add_option("--n", code_n, "Number of physical qubits (even, at least 4)")->required();
  auto* ver = app.add_subcommand("verify", "Run the property and acceptance suite");
  add_common(ver, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::error);
  }

  try {
    if (*sim) return simulate(config, flags);
    if (*swp) return sweep(config, flags);
    if (*gp) return gap(config, flags);
    if (*cd) return code(code_n);
    if (*ver) return verify(flags);
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return static_cast<int>(ExitCode::error);
  }
  return static_cast<int>(ExitCode::error);
}
