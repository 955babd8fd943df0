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

// Parameter sweeps over the charging requirement and the task utility
// requirement, stall detection, and the per-variant maxima summary.
//
// Sweeps evaluate every grid point, including those after the first
// unsatisfiable one, so non-monotone feasibility stays visible.

#ifndef TENP_SWEEP_H_
#define TENP_SWEEP_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tenp/model.h"
#include "tenp/sim.h"

namespace tenp {

enum class SweepAxis { kLambda, kUtility };

struct SweepPoint {
  double param_value = 0.0;
  Verdict verdict = Verdict::kUnsatisfiable;
  std::optional<SimMetrics> metrics;  // present iff satisfiable
  std::size_t placed_count = 0;
};

// Inclusive index range [first, last].
struct StallRange {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const StallRange&, const StallRange&) = default;
};

struct SweepSeries {
  ProblemVariant variant = ProblemVariant::kTenp;
  SweepAxis axis = SweepAxis::kLambda;
  std::vector<SweepPoint> points;
  std::vector<StallRange> stalls;
};

// `points` values evenly spanning the charge bounds of the instance's free
// cells, first = min and last = max. A single point sits at the minimum.
std::vector<double> LambdaGrid(const ProblemInstance& instance,
                               std::size_t points);

// `points` values evenly spanning [lo, hi], each snapped to 12 decimals so
// that e.g. 0.2 is the same double as the literal.
std::vector<double> UtilityGrid(double lo, double hi, std::size_t points);

// Variant must be TENP or ESP.
SweepSeries SweepLambda(const ProblemInstance& instance,
                        std::span<const double> lambda_grid,
                        double simulation_time_s);

// Applies each value to every task. Variant must be TENP or TSP.
SweepSeries SweepUtility(const ProblemInstance& instance,
                         std::span<const double> utility_grid,
                         double simulation_time_s);

// Maximal runs of two or more consecutive satisfiable points whose
// (avg charge, avg utility) pairs are bit-identical.
std::vector<StallRange> DetectStalls(std::span<const SweepPoint> points);

struct VariantMaxima {
  ProblemVariant variant = ProblemVariant::kTenp;
  std::optional<double> max_avg_task_utility;
  std::optional<double> max_avg_harvested_charge;
};

// TENP runs both sweeps, ESP the lambda sweep, TSP the utility sweep; maxima
// are taken over satisfiable points. Order: TENP, ESP, TSP.
std::array<VariantMaxima, 3> VariantSummary(
    const ProblemInstance& instance, std::span<const double> lambda_grid,
    std::span<const double> utility_grid, double simulation_time_s);

}  // namespace tenp

#endif  // TENP_SWEEP_H_
