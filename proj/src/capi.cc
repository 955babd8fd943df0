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

#include "tenp/tenp.h"

#include <cstdlib>
#include <cstring>
#include <iterator>
#include <new>
#include <string>
#include <utility>

#include "tenp/error.h"
#include "tenp/io.h"
#include "tenp/oracle.h"
#include "tenp/radio.h"
#include "tenp/sim.h"
#include "tenp/solver.h"
#include "tenp/sweep.h"

struct tenp_instance {
  tenp::LoadedInstance loaded;
};

struct tenp_placement {
  tenp::Placement placement;
};

namespace {

thread_local std::string last_error;

tenp_status Report(tenp_status status, const std::string& message) {
  last_error = message;
  return status;
}

tenp_status ToStatus(tenp::ErrorCode code) {
  switch (code) {
    case tenp::ErrorCode::kInvalidArgument: return TENP_ERR_ARGUMENT;
    case tenp::ErrorCode::kValidation: return TENP_ERR_VALIDATION;
    case tenp::ErrorCode::kParse: return TENP_ERR_PARSE;
    case tenp::ErrorCode::kIo: return TENP_ERR_IO;
    case tenp::ErrorCode::kBudgetExceeded: return TENP_ERR_BUDGET;
  }
  return TENP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
tenp_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return TENP_OK;
  } catch (const tenp::Error& e) {
    return Report(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Report(TENP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Report(TENP_ERR_INTERNAL, e.what());
  }
}

void NotNull(const void* p, const char* what) {
  if (p == nullptr) {
    tenp::Fail(tenp::ErrorCode::kInvalidArgument,
               std::string(what) + " must not be null");
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tenp::ProblemVariant FromC(tenp_variant v) {
  switch (v) {
    case TENP_VARIANT_TENP: return tenp::ProblemVariant::kTenp;
    case TENP_VARIANT_TSP: return tenp::ProblemVariant::kTsp;
    case TENP_VARIANT_ESP: return tenp::ProblemVariant::kEsp;
  }
  tenp::Fail(tenp::ErrorCode::kInvalidArgument, "unknown variant");
}

double SimTime(const tenp_instance* instance, double requested) {
  return requested > 0 ? requested : instance->loaded.simulation_time_s;
}

tenp_instance* Derived(const tenp_instance* base, tenp::ProblemInstance inst) {
  return new tenp_instance{tenp::LoadedInstance{
      std::move(inst), base->loaded.simulation_time_s, {}}};
}

}  // namespace

extern "C" {

const char* tenp_last_error(void) { return last_error.c_str(); }

void tenp_string_free(char* s) { std::free(s); }

tenp_status tenp_instance_load_file(const char* path, tenp_instance** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new tenp_instance{tenp::LoadInstanceFile(path)};
  });
}

tenp_status tenp_instance_load_string(const char* json_text,
                                      tenp_instance** out) {
  return Guard([&] {
    NotNull(json_text, "json_text");
    NotNull(out, "out");
    *out = new tenp_instance{tenp::ParseInstanceConfig(json_text)};
  });
}

void tenp_instance_free(tenp_instance* instance) { delete instance; }

tenp_status tenp_instance_to_config(const tenp_instance* instance,
                                    char** out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(out, "out");
    *out = Dup(tenp::InstanceToConfig(instance->loaded.instance,
                                      instance->loaded.simulation_time_s));
  });
}

size_t tenp_instance_sensor_count(const tenp_instance* instance) {
  return instance ? instance->loaded.instance.sensor_count() : 0;
}

size_t tenp_instance_free_cell_count(const tenp_instance* instance) {
  return instance ? instance->loaded.instance.environment().free_cells().size()
                  : 0;
}

double tenp_instance_simulation_time(const tenp_instance* instance) {
  return instance ? instance->loaded.simulation_time_s : 0.0;
}

double tenp_instance_lambda(const tenp_instance* instance) {
  return instance ? instance->loaded.instance.lambda() : 0.0;
}

size_t tenp_instance_notice_count(const tenp_instance* instance) {
  return instance ? instance->loaded.notices.size() : 0;
}

const char* tenp_instance_notice(const tenp_instance* instance, size_t index) {
  if (instance == nullptr || index >= instance->loaded.notices.size()) {
    return nullptr;
  }
  return instance->loaded.notices[index].c_str();
}

tenp_status tenp_instance_with_variant(const tenp_instance* instance,
                                       tenp_variant variant,
                                       tenp_instance** out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(out, "out");
    *out = Derived(instance, instance->loaded.instance.WithVariant(FromC(variant)));
  });
}

tenp_status tenp_instance_with_lambda(const tenp_instance* instance,
                                      double lambda, tenp_instance** out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(out, "out");
    *out = Derived(instance, instance->loaded.instance.WithLambda(lambda));
  });
}

tenp_status tenp_charge_bounds(const tenp_instance* instance, double* min_out,
                               double* max_out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(min_out, "min_out");
    NotNull(max_out, "max_out");
    const tenp::ProblemInstance& inst = instance->loaded.instance;
    const tenp::ChargeBounds b =
        tenp::ComputeChargeBounds(inst.environment(), inst.ets(), inst.radio());
    *min_out = b.min;
    *max_out = b.max;
  });
}

tenp_status tenp_solve(const tenp_instance* instance, tenp_placement** out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(out, "out");
    *out = new tenp_placement{
        tenp::DistanceMinimization(instance->loaded.instance)};
  });
}

void tenp_placement_free(tenp_placement* placement) { delete placement; }

int tenp_placement_satisfiable(const tenp_placement* placement) {
  return placement != nullptr &&
         placement->placement.verdict == tenp::Verdict::kSatisfiable;
}

size_t tenp_placement_size(const tenp_placement* placement) {
  return placement ? placement->placement.assignments.size() : 0;
}

tenp_status tenp_placement_get(const tenp_placement* placement, size_t index,
                               int* sensor_id, int* x, int* y) {
  return Guard([&] {
    NotNull(placement, "placement");
    const auto& a = placement->placement.assignments;
    if (index >= a.size()) {
      tenp::Fail(tenp::ErrorCode::kInvalidArgument, "index out of range");
    }
    const auto it = std::next(a.begin(), static_cast<std::ptrdiff_t>(index));
    if (sensor_id) *sensor_id = it->first;
    if (x) *x = it->second.x;
    if (y) *y = it->second.y;
  });
}

tenp_status tenp_placement_write(const tenp_placement* placement, char** out) {
  return Guard([&] {
    NotNull(placement, "placement");
    NotNull(out, "out");
    *out = Dup(tenp::WritePlacement(placement->placement));
  });
}

tenp_status tenp_placement_parse(const char* text, tenp_placement** out) {
  return Guard([&] {
    NotNull(text, "text");
    NotNull(out, "out");
    *out = new tenp_placement{tenp::ParsePlacement(text)};
  });
}

tenp_status tenp_placement_validate(const tenp_placement* placement,
                                    const tenp_instance* instance) {
  return Guard([&] {
    NotNull(placement, "placement");
    NotNull(instance, "instance");
    tenp::ValidatePlacement(placement->placement, instance->loaded.instance);
  });
}

tenp_status tenp_simulate(const tenp_instance* instance,
                          const tenp_placement* placement,
                          double simulation_time_s, tenp_metrics* metrics_out,
                          char** json_out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(placement, "placement");
    tenp::ValidatePlacement(placement->placement, instance->loaded.instance);
    const tenp::SimMetrics m =
        tenp::Simulate(placement->placement, instance->loaded.instance,
                       SimTime(instance, simulation_time_s));
    if (metrics_out) *metrics_out = {m.avg_harvested_charge, m.avg_task_utility};
    if (json_out) *json_out = Dup(tenp::SimMetricsToJson(m));
  });
}

tenp_status tenp_oracle(const tenp_instance* instance, uint64_t budget,
                        char** json_out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(json_out, "json_out");
    *json_out = Dup(tenp::OptimalResultToJson(
        tenp::ExactSolve(instance->loaded.instance, budget)));
  });
}

tenp_status tenp_witness(uint64_t seed, uint64_t attempts, tenp_instance** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = nullptr;
    if (auto w = tenp::FindIncompletenessWitness(seed, attempts)) {
      const double sim_time = w->radio().frame_s;
      *out = new tenp_instance{tenp::LoadedInstance{std::move(*w), sim_time, {}}};
    }
  });
}

tenp_status tenp_lambda_grid(const tenp_instance* instance, size_t points,
                             double* out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(out, "out");
    const auto grid = tenp::LambdaGrid(instance->loaded.instance, points);
    std::memcpy(out, grid.data(), grid.size() * sizeof(double));
  });
}

tenp_status tenp_utility_grid(double lo, double hi, size_t points,
                              double* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto grid = tenp::UtilityGrid(lo, hi, points);
    std::memcpy(out, grid.data(), grid.size() * sizeof(double));
  });
}

tenp_status tenp_sweep_csv(const tenp_instance* instance, tenp_axis axis,
                           const double* grid, size_t grid_len,
                           double simulation_time_s, char** csv_out,
                           int* nonmonotone_out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(grid, "grid");
    NotNull(csv_out, "csv_out");
    const std::span<const double> g(grid, grid_len);
    const double t = SimTime(instance, simulation_time_s);
    const tenp::SweepSeries series =
        axis == TENP_AXIS_LAMBDA
            ? tenp::SweepLambda(instance->loaded.instance, g, t)
            : tenp::SweepUtility(instance->loaded.instance, g, t);
    *csv_out = Dup(tenp::SweepToCsv(series));
    if (nonmonotone_out) {
      *nonmonotone_out = tenp::HasNonMonotoneFeasibility(series) ? 1 : 0;
    }
  });
}

tenp_status tenp_summary_csv(const tenp_instance* instance,
                             const double* lambda_grid, size_t lambda_len,
                             const double* utility_grid, size_t utility_len,
                             double simulation_time_s, char** csv_out) {
  return Guard([&] {
    NotNull(instance, "instance");
    NotNull(lambda_grid, "lambda_grid");
    NotNull(utility_grid, "utility_grid");
    NotNull(csv_out, "csv_out");
    const auto rows = tenp::VariantSummary(
        instance->loaded.instance, std::span(lambda_grid, lambda_len),
        std::span(utility_grid, utility_len),
        SimTime(instance, simulation_time_s));
    *csv_out = Dup(tenp::SummaryToCsv(rows));
  });
}

}  // extern "C"
