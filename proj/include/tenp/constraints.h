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

// Feasibility predicates for a candidate sensor cell. Both comparisons are
// inclusive: a cell whose utility (or charge) exactly equals the requirement
// passes.

#ifndef TENP_CONSTRAINTS_H_
#define TENP_CONSTRAINTS_H_

#include <span>

#include "tenp/model.h"
#include "tenp/radio_params.h"

namespace tenp {

// 1 / ManhattanDistance(cell, task.cell). Throws if the distance is zero.
double SensorUtility(const Cell& cell, const Task& task);

bool CheckUtilityConstraint(const Cell& cell, const Task& task);

bool CheckChargingConstraint(const Cell& cell,
                             std::span<const EnergyTransmitter> ets,
                             const GridEnvironment& env,
                             const RadioParams& params, ChargeUnits lambda);

// TENP: utility and charging. TSP: utility only. ESP: charging only.
bool CheckBoth(const Cell& cell, const Task& task,
               std::span<const EnergyTransmitter> ets,
               const GridEnvironment& env, const RadioParams& params,
               ChargeUnits lambda, ProblemVariant variant);

// Same predicate, reading everything but the cell and task from `instance`.
bool CheckBoth(const Cell& cell, const Task& task,
               const ProblemInstance& instance);

}  // namespace tenp

#endif  // TENP_CONSTRAINTS_H_
