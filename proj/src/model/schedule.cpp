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

#include "aqcs/model/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aqcs {

ScheduleValue schedule_eval(ScheduleKind kind, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::out_of_range("schedule_eval: s = " + std::to_string(s) + " is outside [0, 1]");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (kind) {
    case ScheduleKind::linear:
      return {s, 1.0, 0.0};
    case ScheduleKind::smooth_endpoint:
      return {s - std::sin(two_pi * s) / two_pi, 1.0 - std::cos(two_pi * s), two_pi * std::sin(two_pi * s)};
    case ScheduleKind::polynomial_smooth:
      return {s * s * (3.0 - 2.0 * s), 6.0 * s * (1.0 - s), 6.0 - 12.0 * s};
  }
  throw std::invalid_argument("schedule_eval: unknown schedule kind");
}

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::linear:
      return "linear";
    case ScheduleKind::smooth_endpoint:
      return "smooth-endpoint";
    case ScheduleKind::polynomial_smooth:
      return "polynomial-smooth";
  }
  return "?";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "linear") return ScheduleKind::linear;
  if (name == "smooth-endpoint") return ScheduleKind::smooth_endpoint;
  if (name == "polynomial-smooth") return ScheduleKind::polynomial_smooth;
  throw std::invalid_argument("unknown schedule kind '" + std::string(name) +
                              "' (expected linear, smooth-endpoint or polynomial-smooth)");
}

}  // namespace aqcs
