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

#include "tenp/constraints.h"

#include "tenp/error.h"
#include "tenp/radio.h"

namespace tenp {

double SensorUtility(const Cell& cell, const Task& task) {
  const int d = ManhattanDistance(cell, task.cell);
  if (d == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "sensor cell " + ToString(cell) + " coincides with task " +
             std::to_string(task.id));
  }
  return 1.0 / d;
}

bool CheckUtilityConstraint(const Cell& cell, const Task& task) {
  return task.utility_requirement <= SensorUtility(cell, task);
}

bool CheckChargingConstraint(const Cell& cell,
                             std::span<const EnergyTransmitter> ets,
                             const GridEnvironment& env,
                             const RadioParams& params, ChargeUnits lambda) {
  return lambda <= TotalReceivedCharge(cell, ets, env, params);
}

bool CheckBoth(const Cell& cell, const Task& task,
               std::span<const EnergyTransmitter> ets,
               const GridEnvironment& env, const RadioParams& params,
               ChargeUnits lambda, ProblemVariant variant) {
  if (UsesUtility(variant) && !CheckUtilityConstraint(cell, task)) {
    return false;
  }
  if (UsesCharging(variant) &&
      !CheckChargingConstraint(cell, ets, env, params, lambda)) {
    return false;
  }
  return true;
}

bool CheckBoth(const Cell& cell, const Task& task,
               const ProblemInstance& instance) {
  return CheckBoth(cell, task, instance.ets(), instance.environment(),
                   instance.radio(), instance.lambda(), instance.variant());
}

}  // namespace tenp
