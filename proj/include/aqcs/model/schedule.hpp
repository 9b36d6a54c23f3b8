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

#include <string>
#include <string_view>

namespace aqcs {

/// Interpolation profiles f(s) with f(0) = 0, f(1) = 1.
///
///   linear             f = s
///   smooth_endpoint    f = s - sin(2 pi s) / (2 pi)     f' = f'' = 0 at both ends
///   polynomial_smooth  f = 3 s^2 - 2 s^3                f' = 0 at both ends
enum class ScheduleKind { linear, smooth_endpoint, polynomial_smooth };

struct ScheduleValue {
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

/// Throws std::out_of_range for s outside [0, 1].
ScheduleValue schedule_eval(ScheduleKind kind, double s);

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view name);

}  // namespace aqcs
