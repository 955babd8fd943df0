// Copyright 2026 The TENP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats: the JSON instance config, the placement artifact, and the
// CSV / JSON result emitters.
//
// Instance config (JSON, unknown keys rejected):
//
//   {
//     "grid": {"n": 10, "cell_size_m": 1.0},
//     "tasks": [{"x": 1, "y": 10, "u": 0.2}, ...],
//     "ets": [{"x": 9, "y": 1}, ...],
//     "partition": [[2, 3, 4], ...],          // sensor ids, one list per task
//     "lambda": -100.0,
//     "radio": {"tx_power_dbm": 50, "freq_ghz": 2, "path_loss_rate": 2,
//               "ref_distance_m": 5, "charge_efficiency": 0.5,
//               "frame_s": 10, "op_time_s": 9.5, "rx_power_dbm": 30},
//     "variant": "TENP",
//     "simulation_time_s": 100
//   }
//
// Task j gets id j + 1 and partition[j] lists its sensors. `cell_size_m` and
// `simulation_time_s` are optional (defaults 1.0 m and one frame); the
// loader records a notice when it falls back to a default.
//
// Placement artifact:
//
//   verdict,SATISFIABLE
//   sensor,x,y
//   2,3,4
//   ...
//
// Lines starting with '#' are ignored.

#ifndef TENP_IO_H_
#define TENP_IO_H_

#include <array>
#include <string>
#include <vector>

#include "tenp/model.h"
#include "tenp/oracle.h"
#include "tenp/sim.h"
#include "tenp/sweep.h"

namespace tenp {

inline constexpr const char* kSweepCsvHeader =
    "param,verdict,placed,avg_charge,avg_utility,stall_id";
inline constexpr const char* kSummaryCsvHeader =
    "variant,max_avg_utility,max_avg_charge";

struct LoadedInstance {
  ProblemInstance instance;
  double simulation_time_s;
  std::vector<std::string> notices;
};

// Throws Error(kParse) for malformed JSON and Error(kValidation), prefixed
// with the offending field path, for schema or invariant violations.
LoadedInstance ParseInstanceConfig(const std::string& text);
LoadedInstance LoadInstanceFile(const std::string& path);

std::string InstanceToConfig(const ProblemInstance& instance,
                             double simulation_time_s);

std::string WritePlacement(const Placement& placement);
Placement ParsePlacement(const std::string& text);

// Every assigned sensor exists, every cell is free, no cell is shared, and
// the verdict agrees with the assignment count.
void ValidatePlacement(const Placement& placement,
                       const ProblemInstance& instance);

// 17 significant digits.
std::string FormatDouble(double v);

std::string SweepToCsv(const SweepSeries& series);
std::string SummaryToCsv(const std::array<VariantMaxima, 3>& rows);
std::string SimMetricsToJson(const SimMetrics& metrics);
std::string OptimalResultToJson(const OptimalResult& result);

// True when a satisfiable point follows an unsatisfiable one.
bool HasNonMonotoneFeasibility(const SweepSeries& series);

std::string ReadFile(const std::string& path);

}  // namespace tenp

#endif  // TENP_IO_H_
