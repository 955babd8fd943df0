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

// Test-only helpers: fixture paths, small instance builders, and a
// prune-free brute force that serves as the exact solver's own oracle.

#ifndef TENP_TESTS_TEST_UTIL_H_
#define TENP_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenp/io.h"
#include "tenp/model.h"

namespace tenp::testing {

inline std::string SourcePath(const std::string& rel) {
  return std::string(TENP_SOURCE_DIR) + "/" + rel;
}

inline LoadedInstance LoadTable2() {
  return LoadInstanceFile(SourcePath("configs/table2.cfg"));
}

// One task per entry of `tasks` (cell, u); partition[j] lists task j's
// sensors.
inline ProblemInstance MakeInstance(
    int n, std::vector<std::pair<Cell, double>> tasks, std::vector<Cell> ets,
    std::vector<std::vector<int>> partition, double lambda,
    ProblemVariant variant, RadioParams radio = {}, double cell_size = 1.0) {
  std::vector<Cell> task_cells;
  std::vector<Task> task_list;
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    task_cells.push_back(tasks[j].first);
    task_list.push_back(
        {static_cast<int>(j) + 1, tasks[j].first, tasks[j].second});
  }
  std::vector<EnergyTransmitter> et_list;
  for (std::size_t k = 0; k < ets.size(); ++k) {
    et_list.push_back({static_cast<int>(k) + 1, ets[k]});
  }
  std::vector<SensorGroup> groups;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    groups.push_back({static_cast<int>(j) + 1, partition[j]});
  }
  return ProblemInstance(
      GridEnvironment::Build(n, cell_size, task_cells, ets), task_list,
      et_list, SensorTaskPartition(groups), lambda, radio, variant);
}

struct BruteForceResult {
  bool feasible = false;
  long long best_objective = 0;
  long long leaves = 0;
};

// Enumerates every injective sensor-to-free-cell assignment and checks the
// constraints only at the leaves. Independent of the exact solver: it does
// not share its candidate filtering, bound, or objective code.
inline BruteForceResult BruteForce(const ProblemInstance& inst) {
  struct Sensor {
    Cell task_cell;
    double u;
  };
  std::vector<Sensor> sensors;
  for (const SensorGroup& g : inst.partition().groups()) {
    for (std::size_t i = 0; i < g.sensor_ids.size(); ++i) {
      for (const Task& t : inst.tasks()) {
        if (t.id == g.task_id) sensors.push_back({t.cell, t.utility_requirement});
      }
    }
  }
  const auto free = inst.environment().free_cells();
  const RadioParams& r = inst.radio();
  auto dist = [](Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); };
  auto charge = [&](Cell c) {
    double total = 0;
    for (const EnergyTransmitter& e : inst.ets()) {
      const double d = dist(c, e.cell) * inst.environment().cell_size_m();
      const double pl0 = 20 * std::log10(r.ref_distance_m) +
                         20 * std::log10(r.freq_ghz) + 92.5;
      const double pl = pl0 + 10 * r.path_loss_rate * std::log10(d / r.ref_distance_m);
      total += (r.tx_power_dbm - pl - r.rx_power_dbm) * (r.frame_s - r.op_time_s) *
               r.charge_efficiency;
    }
    return total;
  };
  auto ok = [&](const Sensor& s, Cell c) {
    const bool util = s.u <= 1.0 / dist(c, s.task_cell);
    const bool chg = inst.lambda() <= charge(c);
    switch (inst.variant()) {
      case ProblemVariant::kTenp: return util && chg;
      case ProblemVariant::kTsp: return util;
      case ProblemVariant::kEsp: return chg;
    }
    return false;
  };

  BruteForceResult out;
  std::vector<int> chosen(sensors.size(), -1);
  std::vector<bool> used(free.size(), false);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == sensors.size()) {
      ++out.leaves;
      long long obj = 0;
      for (std::size_t i = 0; i < sensors.size(); ++i) {
        const Cell c = free[chosen[i]];
        if (!ok(sensors[i], c)) return;
        obj += dist(c, sensors[i].task_cell);
        for (const EnergyTransmitter& e : inst.ets()) obj += dist(c, e.cell);
      }
      if (!out.feasible || obj < out.best_objective) out.best_objective = obj;
      out.feasible = true;
      return;
    }
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      chosen[k] = static_cast<int>(i);
      self(self, k + 1);
      used[i] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace tenp::testing

#endif  // TENP_TESTS_TEST_UTIL_H_
