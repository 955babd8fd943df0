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

#include "tenp/sim.h"

#include <cmath>
#include <string>

#include "tenp/constraints.h"
#include "tenp/error.h"
#include "tenp/radio.h"

namespace tenp {
namespace {

bool IsWhole(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

void PerformNetworkOperation() {}

SimMetrics Simulate(const Placement& placement,
                    const ProblemInstance& instance, double simulation_time_s,
                    const NetworkHook& network_hook) {
  const RadioParams& radio = instance.radio();
  if (placement.assignments.size() != instance.sensor_count()) {
    Fail(ErrorCode::kInvalidArgument,
         "simulation needs a total placement: " +
             std::to_string(placement.assignments.size()) + " of " +
             std::to_string(instance.sensor_count()) + " sensors placed");
  }
  if (!IsWhole(radio.frame_s)) {
    Fail(ErrorCode::kInvalidArgument,
         "simulation steps in whole seconds; frame_s must be integral");
  }
  const double frames_exact = simulation_time_s / radio.frame_s;
  if (!(simulation_time_s > 0) || !IsWhole(frames_exact)) {
    Fail(ErrorCode::kInvalidArgument,
         "simulation time must be a positive multiple of frame_s");
  }
  const long long frame_len = static_cast<long long>(radio.frame_s);
  const long long total_steps = static_cast<long long>(simulation_time_s);
  const double window = radio.charging_window_s();

  struct Placed {
    Cell cell;
    const Task* task;
  };
  std::vector<Placed> placed;
  for (const SensorGroup& g : instance.partition().groups()) {
    const Task& task = instance.TaskById(g.task_id);
    for (int s : g.sensor_ids) {
      const auto it = placement.assignments.find(s);
      if (it == placement.assignments.end()) {
        Fail(ErrorCode::kInvalidArgument,
             "sensor " + std::to_string(s) + " is not placed");
      }
      placed.push_back({it->second, &task});
    }
  }

  std::vector<ChargeUnits> accrued(placed.size(), 0.0);
  long long frames = 0;
  for (long long i = 0; i < total_steps; ++i) {
    const long long offset = i % frame_len;
    if (offset == 0) {
      ++frames;
      for (std::size_t s = 0; s < placed.size(); ++s) {
        accrued[s] += TotalReceivedCharge(placed[s].cell, instance.ets(),
                                          instance.environment(), radio);
      }
    }
    if (static_cast<double>(offset) >= window) network_hook();
  }

  SimMetrics m;
  const auto tasks = instance.tasks();
  m.per_sensor_charge.reserve(placed.size());
  double charge_sum = 0.0;
  for (ChargeUnits q : accrued) {
    m.per_sensor_charge.push_back(q / static_cast<double>(frames));
    charge_sum += m.per_sensor_charge.back();
  }
  m.per_task_utility.assign(tasks.size(), 0.0);
  for (const Placed& p : placed) {
    m.per_task_utility[static_cast<std::size_t>(p.task - tasks.data())] +=
        SensorUtility(p.cell, *p.task);
  }
  double utility_sum = 0.0;
  for (double u : m.per_task_utility) utility_sum += u;

  if (!placed.empty()) {
    m.avg_harvested_charge =
        charge_sum / (static_cast<double>(placed.size()) * radio.frame_s);
  }
  if (!tasks.empty()) {
    m.avg_task_utility = utility_sum / static_cast<double>(tasks.size());
  }
  return m;
}

}  // namespace tenp
