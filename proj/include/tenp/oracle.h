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

// Exact solver for small instances.
//
// Depth-first assignment over sensors in partition order, candidate cells in
// row-major order. Cells failing the variant's constraints are never tried
// and a branch is cut as soon as its partial objective plus an admissible
// bound for the remaining sensors cannot beat the incumbent. Because the
// incumbent is only replaced on strict improvement, the returned optimum is
// the lexicographically first among equal-objective placements.

#ifndef TENP_ORACLE_H_
#define TENP_ORACLE_H_

#include <cstdint>
#include <optional>

#include "tenp/model.h"

namespace tenp {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OptimalResult {
  Placement placement;
  std::optional<long long> objective;  // absent when unsatisfiable
  std::uint64_t explored = 0;          // partial assignments tried
};

// Sum over sensors of the distance to the own task plus the distances to
// every ET. Throws if the placement is not total.
long long ObjectiveValue(const Placement& placement,
                         const ProblemInstance& instance);

// Throws Error(kBudgetExceeded) once more than `budget` partial assignments
// have been tried.
OptimalResult ExactSolve(const ProblemInstance& instance,
                         std::uint64_t budget = kDefaultOracleBudget);

// Scans up to `attempts` random instances (grid <= 5, sensors <= 4) drawn
// from `seed` for one the greedy solver rejects while the exact solver finds
// a placement. Returns the first such instance.
std::optional<ProblemInstance> FindIncompletenessWitness(
    std::uint64_t seed, std::uint64_t attempts);

}  // namespace tenp

#endif  // TENP_ORACLE_H_
