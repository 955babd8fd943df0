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

#include "tenp/random_instance.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "tenp/radio.h"

namespace tenp {

int Rng::Uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<int>(r % span);
}

double Rng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

ProblemInstance RandomInstance(Rng& rng, const RandomInstanceOptions& opts) {
  static constexpr std::array<double, 7> kUtilities = {
      0.1, 0.2, 0.25, 1.0 / 3.0, 0.5, 1.0, 0.3};
  static constexpr std::array<ProblemVariant, 3> kVariants = {
      ProblemVariant::kTenp, ProblemVariant::kTsp, ProblemVariant::kEsp};

  const int n = rng.Uniform(opts.min_grid, opts.max_grid);
  const int cells = n * n;
  const int num_tasks = rng.Uniform(1, std::min(opts.max_tasks, cells - 1));
  const int num_ets =
      rng.Uniform(0, std::min(opts.max_ets, cells - 1 - num_tasks));
  const int num_free = cells - num_tasks - num_ets;
  const int num_sensors = rng.Uniform(1, std::min(opts.max_sensors, num_free));

  std::vector<Cell> all;
  for (int y = 1; y <= n; ++y) {
    for (int x = 1; x <= n; ++x) all.push_back({x, y});
  }
  for (int i = cells - 1; i > 0; --i) std::swap(all[i], all[rng.Uniform(0, i)]);

  std::vector<Cell> task_cells(all.begin(), all.begin() + num_tasks);
  std::vector<Cell> et_cells(all.begin() + num_tasks,
                             all.begin() + num_tasks + num_ets);
  GridEnvironment env = GridEnvironment::Build(n, 1.0, task_cells, et_cells);

  std::vector<Task> tasks;
  for (int j = 0; j < num_tasks; ++j) {
    tasks.push_back({j + 1, task_cells[j],
                     kUtilities[rng.Uniform(0, static_cast<int>(kUtilities.size()) - 1)]});
  }
  std::vector<EnergyTransmitter> ets;
  for (int k = 0; k < num_ets; ++k) ets.push_back({k + 1, et_cells[k]});

  std::vector<SensorGroup> groups;
  for (const Task& t : tasks) groups.push_back({t.id, {}});
  for (int s = 1; s <= num_sensors; ++s) {
    groups[rng.Uniform(0, num_tasks - 1)].sensor_ids.push_back(s);
  }

  RadioParams radio;
  double lambda = 0.0;
  if (!ets.empty()) {
    const ChargeBounds b = ComputeChargeBounds(env, ets, radio);
    lambda = b.min + rng.Unit() * (b.max - b.min);
  }
  const ProblemVariant variant = kVariants[rng.Uniform(0, 2)];
  return ProblemInstance(std::move(env), std::move(tasks), std::move(ets),
                         SensorTaskPartition(std::move(groups)), lambda, radio,
                         variant);
}

}  // namespace tenp
