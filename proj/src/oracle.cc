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

#include "tenp/oracle.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "tenp/constraints.h"
#include "tenp/error.h"
#include "tenp/random_instance.h"
#include "tenp/solver.h"

namespace tenp {
namespace {

struct Candidate {
  std::size_t free_index;
  int cost;
};

class Search {
 public:
  Search(const ProblemInstance& instance, std::uint64_t budget)
      : instance_(instance),
        free_(instance.environment().free_cells()),
        budget_(budget) {
    for (const SensorGroup& g : instance.partition().groups()) {
      const Task& task = instance.TaskById(g.task_id);
      for (int s : g.sensor_ids) {
        sensors_.push_back(s);
        std::vector<Candidate> cands;
        for (std::size_t i = 0; i < free_.size(); ++i) {
          if (CheckBoth(free_[i], task, instance)) {
            cands.push_back({i, CombinedDistance(free_[i], task, instance.ets())});
          }
        }
        candidates_.push_back(std::move(cands));
      }
    }
    // remaining_bound_[k]: sum over sensors k.. of their cheapest feasible
    // cell, ignoring occupancy.
    remaining_bound_.assign(sensors_.size() + 1, 0);
    for (std::size_t k = sensors_.size(); k-- > 0;) {
      long long best = std::numeric_limits<int>::max();
      for (const Candidate& c : candidates_[k]) best = std::min<long long>(best, c.cost);
      remaining_bound_[k] = remaining_bound_[k + 1] + best;
    }
  }

  OptimalResult Run() {
    OptimalResult result;
    const bool hopeless = std::any_of(candidates_.begin(), candidates_.end(),
                                      [](const auto& c) { return c.empty(); });
    if (!hopeless) {
      occupied_.assign(free_.size(), false);
      chosen_.assign(sensors_.size(), 0);
      Visit(0, 0);
    }
    result.explored = explored_;
    if (best_) {
      result.objective = *best_;
      for (std::size_t k = 0; k < sensors_.size(); ++k) {
        result.placement.assignments.emplace(sensors_[k], free_[best_choice_[k]]);
      }
      result.placement.verdict = Verdict::kSatisfiable;
    } else {
      result.placement.verdict = Verdict::kUnsatisfiable;
    }
    return result;
  }

 private:
  void Visit(std::size_t k, long long partial) {
    if (k == sensors_.size()) {
      if (!best_ || partial < *best_) {
        best_ = partial;
        best_choice_ = chosen_;
      }
      return;
    }
    for (const Candidate& c : candidates_[k]) {
      if (occupied_[c.free_index]) continue;
      if (++explored_ > budget_) {
        Fail(ErrorCode::kBudgetExceeded,
             "exact search exceeded its budget of " + std::to_string(budget_) +
                 " partial assignments");
      }
      const long long next = partial + c.cost;
      if (best_ && next + remaining_bound_[k + 1] >= *best_) continue;
      occupied_[c.free_index] = true;
      chosen_[k] = c.free_index;
      Visit(k + 1, next);
      occupied_[c.free_index] = false;
    }
  }

  const ProblemInstance& instance_;
  std::span<const Cell> free_;
  std::uint64_t budget_;
  std::vector<int> sensors_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<long long> remaining_bound_;
  std::vector<bool> occupied_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_choice_;
  std::optional<long long> best_;
  std::uint64_t explored_ = 0;
};

}  // namespace

long long ObjectiveValue(const Placement& placement,
                         const ProblemInstance& instance) {
  if (placement.assignments.size() != instance.sensor_count()) {
    Fail(ErrorCode::kInvalidArgument,
         "objective needs a total placement: " +
             std::to_string(placement.assignments.size()) + " of " +
             std::to_string(instance.sensor_count()) + " sensors placed");
  }
  long long total = 0;
  for (const SensorGroup& g : instance.partition().groups()) {
    const Task& task = instance.TaskById(g.task_id);
    for (int s : g.sensor_ids) {
      const auto it = placement.assignments.find(s);
      if (it == placement.assignments.end()) {
        Fail(ErrorCode::kInvalidArgument,
             "sensor " + std::to_string(s) + " is not placed");
      }
      total += CombinedDistance(it->second, task, instance.ets());
    }
  }
  return total;
}

OptimalResult ExactSolve(const ProblemInstance& instance,
                         std::uint64_t budget) {
  return Search(instance, budget).Run();
}

std::optional<ProblemInstance> FindIncompletenessWitness(
    std::uint64_t seed, std::uint64_t attempts) {
  Rng rng(seed);
  RandomInstanceOptions opts;
  opts.min_grid = 2;
  opts.max_grid = 5;
  opts.max_tasks = 3;
  opts.max_ets = 2;
  opts.max_sensors = 4;
  for (std::uint64_t a = 0; a < attempts; ++a) {
    ProblemInstance candidate = RandomInstance(rng, opts);
    if (DistanceMinimization(candidate).verdict == Verdict::kSatisfiable) {
      continue;
    }
    if (ExactSolve(candidate).placement.verdict == Verdict::kSatisfiable) {
      return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace tenp
