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

#include "tenp/solver.h"

#include <algorithm>

#include "tenp/constraints.h"

namespace tenp {

int CombinedDistance(const Cell& cell, const Task& task,
                     std::span<const EnergyTransmitter> ets) {
  int total = ManhattanDistance(cell, task.cell);
  for (const EnergyTransmitter& et : ets) total += ManhattanDistance(cell, et.cell);
  return total;
}

std::vector<RankedCell> RankFreeCells(std::span<const Cell> free,
                                      const Task& task,
                                      std::span<const EnergyTransmitter> ets,
                                      const GridEnvironment& env) {
  std::vector<RankedCell> ranked;
  ranked.reserve(free.size());
  for (const Cell& c : free) {
    ranked.push_back({c, CombinedDistance(c, task, ets), env.RowMajorIndex(c)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedCell& a, const RankedCell& b) {
              if (a.combined_distance != b.combined_distance) {
                return a.combined_distance < b.combined_distance;
              }
              return a.tie_rank < b.tie_rank;
            });
  return ranked;
}

Placement DistanceMinimization(const ProblemInstance& instance) {
  const GridEnvironment& env = instance.environment();
  const auto all_free = env.free_cells();
  std::vector<bool> occupied(all_free.size(), false);
  std::vector<Cell> available;
  available.reserve(all_free.size());

  Placement placement;
  for (const SensorGroup& group : instance.partition().groups()) {
    const Task& task = instance.TaskById(group.task_id);
    for (int sensor : group.sensor_ids) {
      available.clear();
      for (std::size_t i = 0; i < all_free.size(); ++i) {
        if (!occupied[i]) available.push_back(all_free[i]);
      }
      for (const RankedCell& rc :
           RankFreeCells(available, task, instance.ets(), env)) {
        if (CheckBoth(rc.cell, task, instance)) {
          placement.assignments.emplace(sensor, rc.cell);
          const auto it = std::lower_bound(all_free.begin(), all_free.end(), rc.cell);
          occupied[static_cast<std::size_t>(it - all_free.begin())] = true;
          break;
        }
      }
    }
  }
  placement.verdict = placement.assignments.size() == instance.sensor_count()
                          ? Verdict::kSatisfiable
                          : Verdict::kUnsatisfiable;
  return placement;
}

}  // namespace tenp
