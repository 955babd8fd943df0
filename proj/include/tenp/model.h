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

// Grid environment, problem instance and placement types.
//
// Coordinates are 1-based: a grid of side n holds cells (1,1) .. (n,n). Free
// cells are always enumerated row-major with x varying fastest, and that
// order is the tie-breaking backbone of the placement solver.

#ifndef TENP_MODEL_H_
#define TENP_MODEL_H_

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tenp/radio_params.h"

namespace tenp {

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major: y first, then x.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string ToString(const Cell& cell);

int ManhattanDistance(const Cell& a, const Cell& b);

class GridEnvironment {
 public:
  // Throws Error(kValidation) on out-of-bounds, duplicate or overlapping
  // cells; each case has its own diagnostic.
  static GridEnvironment Build(int n, double cell_size_m,
                               std::vector<Cell> task_cells,
                               std::vector<Cell> et_cells);

  int n() const { return n_; }
  double cell_size_m() const { return cell_size_m_; }
  std::span<const Cell> et_cells() const { return et_cells_; }
  std::span<const Cell> task_cells() const { return task_cells_; }
  std::span<const Cell> free_cells() const { return free_cells_; }

  bool InBounds(const Cell& c) const {
    return c.x >= 1 && c.x <= n_ && c.y >= 1 && c.y <= n_;
  }
  // (y-1)*n + x, the 1-based row-major position of a cell in the full grid.
  int RowMajorIndex(const Cell& c) const { return (c.y - 1) * n_ + c.x; }
  bool IsFree(const Cell& c) const;

 private:
  GridEnvironment() = default;

  int n_ = 0;
  double cell_size_m_ = 1.0;
  std::vector<Cell> et_cells_;
  std::vector<Cell> task_cells_;
  std::vector<Cell> free_cells_;
  std::vector<bool> free_mask_;  // indexed by RowMajorIndex - 1
};

struct Task {
  int id = 0;
  Cell cell;
  double utility_requirement = 0.0;
};

struct EnergyTransmitter {
  int id = 0;
  Cell cell;
};

struct SensorGroup {
  int task_id = 0;
  std::vector<int> sensor_ids;
};

// Sensor ids are opaque labels; they need not be contiguous. Group order and
// within-group order fix the order in which the solver places sensors.
class SensorTaskPartition {
 public:
  SensorTaskPartition() = default;
  explicit SensorTaskPartition(std::vector<SensorGroup> groups);

  std::span<const SensorGroup> groups() const { return groups_; }
  std::size_t sensor_count() const { return sensor_count_; }
  // All sensor ids in processing order.
  std::vector<int> SensorOrder() const;

 private:
  std::vector<SensorGroup> groups_;
  std::size_t sensor_count_ = 0;
};

enum class ProblemVariant { kTenp, kTsp, kEsp };

std::string ToString(ProblemVariant v);
// Accepts "TENP", "TSP", "ESP".
ProblemVariant ParseVariant(const std::string& text);

inline bool UsesUtility(ProblemVariant v) { return v != ProblemVariant::kEsp; }
inline bool UsesCharging(ProblemVariant v) { return v != ProblemVariant::kTsp; }

class ProblemInstance {
 public:
  // Validates every cross-object invariant: one task per task cell in order,
  // one ET per ET cell in order, requirements in (0, 1], the partition
  // covering known tasks only, enough free cells for all sensors.
  ProblemInstance(GridEnvironment environment, std::vector<Task> tasks,
                  std::vector<EnergyTransmitter> ets,
                  SensorTaskPartition partition, double lambda,
                  RadioParams radio, ProblemVariant variant);

  const GridEnvironment& environment() const { return environment_; }
  std::span<const Task> tasks() const { return tasks_; }
  std::span<const EnergyTransmitter> ets() const { return ets_; }
  const SensorTaskPartition& partition() const { return partition_; }
  double lambda() const { return lambda_; }
  const RadioParams& radio() const { return radio_; }
  ProblemVariant variant() const { return variant_; }

  std::size_t sensor_count() const { return partition_.sensor_count(); }
  const Task& TaskById(int id) const;

  ProblemInstance WithLambda(double lambda) const;
  ProblemInstance WithVariant(ProblemVariant variant) const;
  ProblemInstance WithUniformUtility(double u) const;

 private:
  GridEnvironment environment_;
  std::vector<Task> tasks_;
  std::vector<EnergyTransmitter> ets_;
  SensorTaskPartition partition_;
  double lambda_;
  RadioParams radio_;
  ProblemVariant variant_;
};

enum class Verdict { kSatisfiable, kUnsatisfiable };

std::string ToString(Verdict v);
Verdict ParseVerdict(const std::string& text);

struct Placement {
  std::map<int, Cell> assignments;  // sensor id -> cell
  Verdict verdict = Verdict::kUnsatisfiable;

  friend bool operator==(const Placement&, const Placement&) = default;
};

}  // namespace tenp

#endif  // TENP_MODEL_H_
