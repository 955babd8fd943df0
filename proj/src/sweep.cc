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

#include "tenp/sweep.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tenp/error.h"
#include "tenp/radio.h"
#include "tenp/solver.h"

namespace tenp {
namespace {

void RequireAscending(std::span<const double> grid, const char* what) {
  if (grid.empty()) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + " grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + " grid holds a non-finite value");
    }
    if (i > 0 && !(grid[i - 1] < grid[i])) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + " grid must be strictly ascending");
    }
  }
}

SweepPoint Evaluate(const ProblemInstance& instance, double param,
                    double simulation_time_s) {
  SweepPoint p;
  p.param_value = param;
  const Placement placement = DistanceMinimization(instance);
  p.verdict = placement.verdict;
  p.placed_count = placement.assignments.size();
  if (p.verdict == Verdict::kSatisfiable) {
    p.metrics = Simulate(placement, instance, simulation_time_s);
  }
  return p;
}

void TakeMax(std::optional<double>& slot, double v) {
  if (!slot || v > *slot) slot = v;
}

void Accumulate(VariantMaxima& m, const SweepSeries& s) {
  for (const SweepPoint& p : s.points) {
    if (!p.metrics) continue;
    TakeMax(m.max_avg_task_utility, p.metrics->avg_task_utility);
    TakeMax(m.max_avg_harvested_charge, p.metrics->avg_harvested_charge);
  }
}

}  // namespace

std::vector<double> LambdaGrid(const ProblemInstance& instance,
                               std::size_t points) {
  if (points == 0) {
    Fail(ErrorCode::kInvalidArgument, "lambda grid needs at least one point");
  }
  const ChargeBounds b = ComputeChargeBounds(
      instance.environment(), instance.ets(), instance.radio());
  if (points == 1) return {b.min};
  if (!(b.min < b.max)) {
    Fail(ErrorCode::kInvalidArgument,
         "charge bounds are degenerate; a multi-point lambda grid would not "
         "be strictly ascending");
  }
  std::vector<double> grid(points);
  const double step = (b.max - b.min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = b.min + step * i;
  grid.back() = b.max;
  return grid;
}

std::vector<double> UtilityGrid(double lo, double hi, std::size_t points) {
  if (points == 0) {
    Fail(ErrorCode::kInvalidArgument, "utility grid needs at least one point");
  }
  if (points > 1 && !(lo < hi)) {
    Fail(ErrorCode::kInvalidArgument, "utility grid needs lo < hi");
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const double v = lo + (hi - lo) * t;
    grid[i] = std::round(v * 1e12) / 1e12;
  }
  return grid;
}

SweepSeries SweepLambda(const ProblemInstance& instance,
                        std::span<const double> lambda_grid,
                        double simulation_time_s) {
  if (instance.variant() == ProblemVariant::kTsp) {
    Fail(ErrorCode::kInvalidArgument,
         "TSP ignores the charging requirement; a lambda sweep is undefined");
  }
  RequireAscending(lambda_grid, "lambda");
  SweepSeries series;
  series.variant = instance.variant();
  series.axis = SweepAxis::kLambda;
  for (double lambda : lambda_grid) {
    series.points.push_back(
        Evaluate(instance.WithLambda(lambda), lambda, simulation_time_s));
  }
  series.stalls = DetectStalls(series.points);
  return series;
}

SweepSeries SweepUtility(const ProblemInstance& instance,
                         std::span<const double> utility_grid,
                         double simulation_time_s) {
  if (instance.variant() == ProblemVariant::kEsp) {
    Fail(ErrorCode::kInvalidArgument,
         "ESP ignores task utility; a utility sweep is undefined");
  }
  RequireAscending(utility_grid, "utility");
  for (double u : utility_grid) {
    if (!(u > 0.0 && u <= 1.0)) {
      Fail(ErrorCode::kInvalidArgument, "utility values must lie in (0, 1]");
    }
  }
  SweepSeries series;
  series.variant = instance.variant();
  series.axis = SweepAxis::kUtility;
  for (double u : utility_grid) {
    series.points.push_back(
        Evaluate(instance.WithUniformUtility(u), u, simulation_time_s));
  }
  series.stalls = DetectStalls(series.points);
  return series;
}

std::vector<StallRange> DetectStalls(std::span<const SweepPoint> points) {
  auto same = [&](std::size_t a, std::size_t b) {
    const auto& ma = points[a].metrics;
    const auto& mb = points[b].metrics;
    return ma && mb && ma->avg_harvested_charge == mb->avg_harvested_charge &&
           ma->avg_task_utility == mb->avg_task_utility;
  };
  std::vector<StallRange> stalls;
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i;
    while (j + 1 < points.size() && same(j, j + 1)) ++j;
    if (j > i) stalls.push_back({i, j});
    i = j + 1;
  }
  return stalls;
}

std::array<VariantMaxima, 3> VariantSummary(
    const ProblemInstance& instance, std::span<const double> lambda_grid,
    std::span<const double> utility_grid, double simulation_time_s) {
  std::array<VariantMaxima, 3> out;
  out[0].variant = ProblemVariant::kTenp;
  out[1].variant = ProblemVariant::kEsp;
  out[2].variant = ProblemVariant::kTsp;

  const ProblemInstance tenp = instance.WithVariant(ProblemVariant::kTenp);
  Accumulate(out[0], SweepLambda(tenp, lambda_grid, simulation_time_s));
  Accumulate(out[0], SweepUtility(tenp, utility_grid, simulation_time_s));
  Accumulate(out[1], SweepLambda(instance.WithVariant(ProblemVariant::kEsp),
                                 lambda_grid, simulation_time_s));
  Accumulate(out[2], SweepUtility(instance.WithVariant(ProblemVariant::kTsp),
                                  utility_grid, simulation_time_s));
  return out;
}

}  // namespace tenp
