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

#include "aqcs/runner/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace aqcs {

namespace {

// CSV field without separators or quotes.
std::string sanitize(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '"' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

}  // namespace

SweepSpec SweepSpec::from_config(const ExperimentConfig& cfg) {
  SweepSpec spec;
  spec.base = cfg;
  spec.axes = cfg.sweep;
  spec.base.sweep.clear();
  return spec;
}

std::size_t SweepSpec::size() const {
  std::size_t total = 1;
  for (const auto& axis : axes) {
    if (axis.values.empty()) throw ConfigError(fmt::format("sweep.{}: axis has no values", axis.path));
    total *= axis.values.size();
  }
  return total;
}

std::vector<std::string> SweepSpec::values_at(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("SweepSpec: index out of range");
  std::vector<std::string> values(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t len = axes[a].values.size();
    values[a] = axes[a].values[index % len];
    index /= len;
  }
  return values;
}

ExperimentConfig SweepSpec::point(std::size_t index) const {
  ExperimentConfig cfg = base;
  const auto values = values_at(index);
  for (std::size_t a = 0; a < axes.size(); ++a) set_field(cfg, axes[a].path, values[a]);
  cfg.validate();
  return cfg;
}

std::string SweepResult::csv(const SweepSpec& spec) const {
  const std::string header = csv_header();
  const auto metric_columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  std::string out = "index";
  for (const auto& axis : spec.axes) out += "," + axis.path;
  out += "," + header + ",status\n";
  for (const auto& p : points) {
    out += fmt::format("{}", p.index);
    for (const auto& v : p.values) out += "," + sanitize(v);
    out += ",";
    out += p.report ? csv_row(*p.report) : std::string(metric_columns - 1, ',');
    out += "," + sanitize(p.status) + "\n";
  }
  return out;
}

ExitCode SweepResult::exit_code() const {
  ExitCode code = ExitCode::ok;
  for (const auto& p : points) {
    if (p.status.rfind("error", 0) == 0) return ExitCode::error;
    if (p.status != "ok") code = ExitCode::bound_violated;
  }
  return code;
}

SweepResult run_sweep(const SweepSpec& spec, std::size_t parallelism,
                      const std::function<void(const SweepPoint&)>& on_point) {
  const std::size_t total = spec.size();
  SweepResult result;
  result.points.resize(total);
  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      SweepPoint& p = result.points[i];
      p.index = i;
      p.values = spec.values_at(i);
      try {
        const ExperimentResult r = run_experiment(spec.point(i));
        std::string failed;
        for (const auto& v : r.report.verdicts) {
          if (v.checked && !v.passed) failed += (failed.empty() ? "" : "+") + v.name;
        }
        p.status = failed.empty() ? "ok" : "bound_violated:" + failed;
        p.report = r.report;
      } catch (const std::exception& e) {
        p.status = std::string("error:") + e.what();
      }
      if (on_point) {
        std::lock_guard lock(callback_mutex);
        on_point(p);
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(parallelism, 1, total);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return result;
}

}  // namespace aqcs
