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

// Greedy distance-minimizing placement.
//
// Sensors are placed one at a time, tasks outer and sensors inner, in
// partition order. For each sensor every still-free cell is ranked by its
// Manhattan distance to the sensor's task plus its distances to all ETs; the
// first ranked cell that passes the variant's constraints is taken. A sensor
// with no passing cell is left unplaced and the run continues, so an
// unsatisfiable verdict still carries the partial placement.

#ifndef TENP_SOLVER_H_
#define TENP_SOLVER_H_

#include <span>
#include <vector>

#include "tenp/model.h"

namespace tenp {

struct RankedCell {
  Cell cell;
  int combined_distance = 0;
  int tie_rank = 0;  // row-major index in the full grid
};

int CombinedDistance(const Cell& cell, const Task& task,
                     std::span<const EnergyTransmitter> ets);

// Ascending by combined distance, ties by ascending row-major index. The
// result does not depend on the order of `free`.
std::vector<RankedCell> RankFreeCells(std::span<const Cell> free,
                                      const Task& task,
                                      std::span<const EnergyTransmitter> ets,
                                      const GridEnvironment& env);

Placement DistanceMinimization(const ProblemInstance& instance);

}  // namespace tenp

#endif  // TENP_SOLVER_H_
