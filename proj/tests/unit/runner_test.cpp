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

#include <cstdlib>
#include <filesystem>

#include "aqcs/runner/config.hpp"
#include "aqcs/runner/experiment.hpp"
#include "aqcs/runner/sweep.hpp"

namespace aqcs {
namespace {

const char* kMinimal = R"(
[model]
n = 4
total_time = 2
[protocol]
tau = 0.1
)";

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, DefaultsAndParsing) {
  const ExperimentConfig cfg = parse_config(kMinimal);
  EXPECT_EQ(cfg.model.n, 4u);
  EXPECT_EQ(cfg.model.total_time, 2.0);
  ASSERT_TRUE(cfg.protocol);
  EXPECT_EQ(cfg.protocol->tau, 0.1);
  EXPECT_FALSE(cfg.scaling);
  EXPECT_EQ(cfg.run.tolerance, 1e-10);
  EXPECT_TRUE(cfg.output.csv && cfg.output.json);
}

TEST(Config, RoundTrip) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.model.coupling = 0.123456789012345;
  cfg.model.schedule = ScheduleKind::polynomial_smooth;
  cfg.run.bath_initial = BathInitialState::ground;
  cfg.output.json = false;
  cfg.sweep = {SweepAxis{"protocol.tau", {"0.1", "0.05"}}};
  EXPECT_EQ(parse_config(serialize(cfg)), cfg);

  ExperimentConfig custom = cfg;
  custom.model.preset = "custom";
  custom.model.code = false;
  custom.model.n = 2;
  custom.model.h0 = "-1*XI; -1*IX";
  custom.model.h1 = "0.5*ZZ; -0.25*ZI";
  custom.protocol.reset();
  custom.scaling = ScalingConfig{};
  custom.scaling->zeta = 3.0;
  custom.sweep.clear();
  EXPECT_EQ(parse_config(serialize(custom)), custom);
}

TEST(Config, ProtocolAndScalingAreExclusive) {
  const std::string both = std::string(kMinimal) + "[scaling]\nz = 1\n";
  EXPECT_NE(config_error(both).find("exactly one of [protocol] and [scaling]"), std::string::npos);
  EXPECT_NE(config_error("[model]\nn = 4\n").find("exactly one"), std::string::npos);
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(config_error(std::string(kMinimal) + "[run]\nbogus = 1\n").find("run.bogus"), std::string::npos);
  EXPECT_NE(config_error("[model]\nn = four\n[protocol]\n").find("model.n"), std::string::npos);
  EXPECT_NE(config_error("[model]\nn = 4\n[protocol]\ntau = 0.1\nwidth = 0.2\n").find("protocol.width"), std::string::npos);
  EXPECT_NE(config_error("[model]\nn = 5\n[protocol]\n").find("model.n"), std::string::npos);
  EXPECT_NE(config_error("[model]\nn = 4\ncode = false\npenalty = 1\n[protocol]\n").find("model.penalty"),
            std::string::npos);
  EXPECT_NE(config_error("[other]\nx = 1\n").find("other"), std::string::npos);
}

TEST(Config, Terms) {
  const TermList t = parse_terms("-1*XI; 0.5*ZZ", 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].coefficient, -1.0);
  EXPECT_EQ(t[1].string, PauliString::parse("ZZ"));
  EXPECT_EQ(parse_terms(format_terms(t), 2), t);
  EXPECT_THROW(parse_terms("XI", 2), ConfigError);
  EXPECT_THROW(parse_terms("1*XII", 2), ConfigError);
  EXPECT_THROW(parse_terms("", 2), ConfigError);
}

TEST(Config, SetField) {
  ExperimentConfig cfg = parse_config(kMinimal);
  set_field(cfg, "model.n_bath", "2");
  set_field(cfg, "protocol.tau", "0.05");
  set_field(cfg, "model.schedule", "linear");
  EXPECT_EQ(cfg.model.n_bath, 2u);
  EXPECT_EQ(cfg.protocol->tau, 0.05);
  EXPECT_EQ(cfg.model.schedule, ScheduleKind::linear);
  EXPECT_THROW(set_field(cfg, "model.nope", "1"), ConfigError);
  EXPECT_THROW(set_field(cfg, "tau", "1"), ConfigError);
}

TEST(Sweep, CrossProductOrder) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.sweep = {SweepAxis{"model.coupling", {"0.1", "0.2"}}, SweepAxis{"protocol.tau", {"0.1", "0.05", "0.025"}}};
  const SweepSpec spec = SweepSpec::from_config(cfg);
  EXPECT_EQ(spec.size(), 6u);
  EXPECT_TRUE(spec.base.sweep.empty());
  EXPECT_EQ(spec.values_at(0), (std::vector<std::string>{"0.1", "0.1"}));
  EXPECT_EQ(spec.values_at(4), (std::vector<std::string>{"0.2", "0.05"}));
  EXPECT_EQ(spec.point(5).protocol->tau, 0.025);
  EXPECT_THROW(spec.values_at(6), std::out_of_range);
}

TEST(Sweep, EmptyAxisIsAConfigError) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.sweep = {SweepAxis{"protocol.tau", {}}};
  EXPECT_THROW(SweepSpec::from_config(cfg).size(), ConfigError);
  EXPECT_THROW(parse_config(std::string(kMinimal) + "[sweep]\nprotocol.tau =\n"), ConfigError);
}

TEST(Sweep, FailedPointsAreReportedNotThrown) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.model.coupling = 0.0;
  cfg.run.tolerance = 1e-8;
  cfg.sweep = {SweepAxis{"protocol.width", {"0", "0.5"}}};
  const SweepSpec spec = SweepSpec::from_config(cfg);
  const SweepResult r = run_sweep(spec, 2);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_EQ(r.points[0].status, "ok");
  EXPECT_EQ(r.points[1].status.rfind("error:", 0), 0u);
  EXPECT_EQ(r.exit_code(), ExitCode::error);
  const std::string csv = r.csv(spec);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,protocol.width," + csv_header() + ",status");
}

TEST(Experiment, PrepareDerivesCycles) {
  const PreparedExperiment p = prepare(parse_config(kMinimal));
  EXPECT_EQ(p.schedule.cycles(), 5u);
  EXPECT_NEAR(p.schedule.total_time(), 2.0, 1e-12);
  ExperimentConfig dilated = parse_config(kMinimal);
  dilated.run.dilation = 2.0;
  EXPECT_EQ(prepare(dilated).schedule.cycles(), 10u);
}

TEST(Experiment, DeterministicOutputs) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.run.tolerance = 1e-8;
  const ExperimentResult a = run_experiment(cfg);
  const ExperimentResult b = run_experiment(cfg);
  EXPECT_EQ(a.csv, b.csv);
  EXPECT_EQ(a.json, b.json);
  EXPECT_EQ(a.csv.substr(0, a.csv.find('\n')), csv_header());
  EXPECT_NE(a.json.find("\"d_D\""), std::string::npos);
}

TEST(Experiment, OutputDirectoryPrecedence) {
  ExperimentConfig cfg = parse_config(kMinimal);
  cfg.output.directory = "from-config";
  ::unsetenv("AQC_SHIELD_OUT");
  EXPECT_EQ(resolve_output_dir(cfg, std::nullopt), std::filesystem::path("from-config"));
  ::setenv("AQC_SHIELD_OUT", "from-env", 1);
  EXPECT_EQ(resolve_output_dir(cfg, std::nullopt), std::filesystem::path("from-env"));
  EXPECT_EQ(resolve_output_dir(cfg, std::string("from-flag")), std::filesystem::path("from-flag"));
  ::unsetenv("AQC_SHIELD_OUT");
}

}  // namespace
}  // namespace aqcs
