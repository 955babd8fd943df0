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

#include "tenp/model.h"

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

#include "tenp/error.h"

namespace tenp {
namespace {

std::string CellList(const char* name, std::size_t index, const Cell& c) {
  std::ostringstream os;
  os << name << "[" << index << "] " << ToString(c);
  return os.str();
}

void CheckCells(const char* name, const std::vector<Cell>& cells, int n) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.x < 1 || c.x > n || c.y < 1 || c.y > n) {
      Fail(ErrorCode::kValidation,
           CellList(name, i, c) + " is outside the " + std::to_string(n) +
               "x" + std::to_string(n) + " grid");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (cells[j] == c) {
        Fail(ErrorCode::kValidation,
             "duplicate cell: " + CellList(name, j, cells[j]) + " and " +
                 CellList(name, i, c));
      }
    }
  }
}

}  // namespace

std::string ToString(const Cell& cell) {
  return "(" + std::to_string(cell.x) + "," + std::to_string(cell.y) + ")";
}

int ManhattanDistance(const Cell& a, const Cell& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

GridEnvironment GridEnvironment::Build(int n, double cell_size_m,
                                       std::vector<Cell> task_cells,
                                       std::vector<Cell> et_cells) {
  if (n < 1) {
    Fail(ErrorCode::kValidation,
         "grid side must be at least 1, got " + std::to_string(n));
  }
  if (!(cell_size_m > 0.0) || !std::isfinite(cell_size_m)) {
    Fail(ErrorCode::kValidation, "cell_size_m must be positive and finite");
  }
  CheckCells("tasks", task_cells, n);
  CheckCells("ets", et_cells, n);
  for (std::size_t i = 0; i < task_cells.size(); ++i) {
    for (std::size_t k = 0; k < et_cells.size(); ++k) {
      if (task_cells[i] == et_cells[k]) {
        Fail(ErrorCode::kValidation,
             "overlapping cells: " + CellList("tasks", i, task_cells[i]) +
                 " and " + CellList("ets", k, et_cells[k]));
      }
    }
  }

  GridEnvironment env;
  env.n_ = n;
  env.cell_size_m_ = cell_size_m;
  env.task_cells_ = std::move(task_cells);
  env.et_cells_ = std::move(et_cells);
  env.free_mask_.assign(static_cast<std::size_t>(n) * n, true);
  for (const Cell& c : env.task_cells_) env.free_mask_[env.RowMajorIndex(c) - 1] = false;
  for (const Cell& c : env.et_cells_) env.free_mask_[env.RowMajorIndex(c) - 1] = false;
  for (int y = 1; y <= n; ++y) {
    for (int x = 1; x <= n; ++x) {
      if (env.free_mask_[(y - 1) * n + x - 1]) env.free_cells_.push_back({x, y});
    }
  }
  return env;
}

bool GridEnvironment::IsFree(const Cell& c) const {
  return InBounds(c) && free_mask_[RowMajorIndex(c) - 1];
}

SensorTaskPartition::SensorTaskPartition(std::vector<SensorGroup> groups)
    : groups_(std::move(groups)) {
  std::set<int> seen_sensors;
  std::set<int> seen_tasks;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (!seen_tasks.insert(groups_[g].task_id).second) {
      Fail(ErrorCode::kValidation, "partition[" + std::to_string(g) +
                                       "]: task " +
                                       std::to_string(groups_[g].task_id) +
                                       " appears in more than one group");
    }
    for (int s : groups_[g].sensor_ids) {
      if (!seen_sensors.insert(s).second) {
        Fail(ErrorCode::kValidation,
             "partition[" + std::to_string(g) + "]: sensor " +
                 std::to_string(s) + " is associated with more than one task");
      }
    }
  }
  sensor_count_ = seen_sensors.size();
}

std::vector<int> SensorTaskPartition::SensorOrder() const {
  std::vector<int> order;
  order.reserve(sensor_count_);
  for (const SensorGroup& g : groups_) {
    order.insert(order.end(), g.sensor_ids.begin(), g.sensor_ids.end());
  }
  return order;
}

std::string ToString(ProblemVariant v) {
  switch (v) {
    case ProblemVariant::kTenp: return "TENP";
    case ProblemVariant::kTsp: return "TSP";
    case ProblemVariant::kEsp: return "ESP";
  }
  return "?";
}

ProblemVariant ParseVariant(const std::string& text) {
  if (text == "TENP") return ProblemVariant::kTenp;
  if (text == "TSP") return ProblemVariant::kTsp;
  if (text == "ESP") return ProblemVariant::kEsp;
  Fail(ErrorCode::kValidation,
       "unknown variant '" + text + "' (expected TENP, TSP or ESP)");
}

std::string ToString(Verdict v) {
  return v == Verdict::kSatisfiable ? "SATISFIABLE" : "UNSATISFIABLE";
}

Verdict ParseVerdict(const std::string& text) {
  if (text == "SATISFIABLE") return Verdict::kSatisfiable;
  if (text == "UNSATISFIABLE") return Verdict::kUnsatisfiable;
  Fail(ErrorCode::kParse, "unknown verdict '" + text + "'");
}

ProblemInstance::ProblemInstance(GridEnvironment environment,
                                 std::vector<Task> tasks,
                                 std::vector<EnergyTransmitter> ets,
                                 SensorTaskPartition partition, double lambda,
                                 RadioParams radio, ProblemVariant variant)
    : environment_(std::move(environment)),
      tasks_(std::move(tasks)),
      ets_(std::move(ets)),
      partition_(std::move(partition)),
      lambda_(lambda),
      radio_(radio),
      variant_(variant) {
  radio_.Validate();
  if (!std::isfinite(lambda_)) {
    Fail(ErrorCode::kValidation, "lambda must be finite");
  }
  const auto task_cells = environment_.task_cells();
  const auto et_cells = environment_.et_cells();
  if (tasks_.size() != task_cells.size()) {
    Fail(ErrorCode::kValidation, "task count does not match task cells");
  }
  if (ets_.size() != et_cells.size()) {
    Fail(ErrorCode::kValidation, "ET count does not match ET cells");
  }
  std::set<int> task_ids;
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const Task& t = tasks_[i];
    const std::string where = "tasks[" + std::to_string(i) + "]";
    if (!(t.cell == task_cells[i])) {
      Fail(ErrorCode::kValidation, where + " does not occupy its task cell");
    }
    if (!task_ids.insert(t.id).second) {
      Fail(ErrorCode::kValidation, where + ": duplicate task id " +
                                       std::to_string(t.id));
    }
    if (!(t.utility_requirement > 0.0)) {
      Fail(ErrorCode::kValidation, where + ".u must be positive");
    }
    if (t.utility_requirement > 1.0) {
      Fail(ErrorCode::kValidation,
           where + ".u exceeds 1, the utility of an adjacent cell; the task "
                   "can never be served");
    }
  }
  for (std::size_t k = 0; k < ets_.size(); ++k) {
    if (!(ets_[k].cell == et_cells[k])) {
      Fail(ErrorCode::kValidation,
           "ets[" + std::to_string(k) + "] does not occupy its ET cell");
    }
  }
  const auto groups = partition_.groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (!task_ids.contains(groups[g].task_id)) {
      Fail(ErrorCode::kValidation, "partition[" + std::to_string(g) +
                                       "] references unknown task " +
                                       std::to_string(groups[g].task_id));
    }
  }
  if (partition_.sensor_count() > environment_.free_cells().size()) {
    Fail(ErrorCode::kValidation,
         std::to_string(partition_.sensor_count()) + " sensors but only " +
             std::to_string(environment_.free_cells().size()) +
             " free cells");
  }
}

const Task& ProblemInstance::TaskById(int id) const {
  for (const Task& t : tasks_) {
    if (t.id == id) return t;
  }
  Fail(ErrorCode::kInvalidArgument, "no task with id " + std::to_string(id));
}

ProblemInstance ProblemInstance::WithLambda(double lambda) const {
  ProblemInstance copy = *this;
  if (!std::isfinite(lambda)) {
    Fail(ErrorCode::kInvalidArgument, "lambda must be finite");
  }
  copy.lambda_ = lambda;
  return copy;
}

ProblemInstance ProblemInstance::WithVariant(ProblemVariant variant) const {
  ProblemInstance copy = *this;
  copy.variant_ = variant;
  return copy;
}

ProblemInstance ProblemInstance::WithUniformUtility(double u) const {
  std::vector<Task> tasks = tasks_;
  for (Task& t : tasks) t.utility_requirement = u;
  return ProblemInstance(environment_, std::move(tasks), ets_, partition_,
                         lambda_, radio_, variant_);
}

}  // namespace tenp
