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

#include <memory>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

const std::string kTable2 = std::string(TENP_SOURCE_DIR) + "/configs/table2.cfg";

struct InstanceDeleter {
  void operator()(tenp_instance* p) const { tenp_instance_free(p); }
};
struct PlacementDeleter {
  void operator()(tenp_placement* p) const { tenp_placement_free(p); }
};
using InstancePtr = std::unique_ptr<tenp_instance, InstanceDeleter>;
using PlacementPtr = std::unique_ptr<tenp_placement, PlacementDeleter>;

std::string Take(char* s) {
  std::string out = s ? s : "";
  tenp_string_free(s);
  return out;
}

InstancePtr Load() {
  tenp_instance* raw = nullptr;
  EXPECT_EQ(tenp_instance_load_file(kTable2.c_str(), &raw), TENP_OK) << tenp_last_error();
  return InstancePtr(raw);
}

TEST(CApiTest, LoadAndInspect) {
  auto inst = Load();
  EXPECT_EQ(tenp_instance_sensor_count(inst.get()), 26u);
  EXPECT_EQ(tenp_instance_free_cell_count(inst.get()), 92u);
  EXPECT_EQ(tenp_instance_simulation_time(inst.get()), 100);
  EXPECT_EQ(tenp_instance_lambda(inst.get()), -97.0);
  EXPECT_EQ(tenp_instance_notice_count(inst.get()), 0u);
  EXPECT_EQ(tenp_instance_notice(inst.get(), 0), nullptr);

  char* cfg = nullptr;
  ASSERT_EQ(tenp_instance_to_config(inst.get(), &cfg), TENP_OK);
  const std::string text = Take(cfg);
  tenp_instance* again = nullptr;
  ASSERT_EQ(tenp_instance_load_string(text.c_str(), &again), TENP_OK);
  InstancePtr owned(again);
  EXPECT_EQ(tenp_instance_sensor_count(again), 26u);
}

TEST(CApiTest, ErrorCodesAndMessages) {
  tenp_instance* out = nullptr;
  EXPECT_EQ(tenp_instance_load_file("/nonexistent/x.cfg", &out), TENP_ERR_IO);
  EXPECT_EQ(out, nullptr);
  EXPECT_THAT(tenp_last_error(), HasSubstr("x.cfg"));

  EXPECT_EQ(tenp_instance_load_string("{", &out), TENP_ERR_PARSE);
  EXPECT_EQ(tenp_instance_load_string("{}", &out), TENP_ERR_VALIDATION);
  EXPECT_EQ(tenp_instance_load_string(nullptr, &out), TENP_ERR_ARGUMENT);
  EXPECT_EQ(tenp_instance_load_file(kTable2.c_str(), nullptr), TENP_ERR_ARGUMENT);
  EXPECT_EQ(tenp_solve(nullptr, nullptr), TENP_ERR_ARGUMENT);

  auto inst = Load();
  char* json = nullptr;
  EXPECT_EQ(tenp_oracle(inst.get(), 1000, &json), TENP_ERR_BUDGET);
  EXPECT_EQ(json, nullptr);
  EXPECT_THAT(tenp_last_error(), HasSubstr("budget"));
}

TEST(CApiTest, SolveSimulateRoundTrip) {
  auto inst = Load();
  tenp_placement* raw = nullptr;
  ASSERT_EQ(tenp_solve(inst.get(), &raw), TENP_OK);
  PlacementPtr placement(raw);
  EXPECT_EQ(tenp_placement_satisfiable(raw), 1);
  ASSERT_EQ(tenp_placement_size(raw), 26u);
  int sensor = 0, x = 0, y = 0;
  ASSERT_EQ(tenp_placement_get(raw, 0, &sensor, &x, &y), TENP_OK);
  EXPECT_EQ(sensor, 2);
  EXPECT_EQ(tenp_placement_get(raw, 26, &sensor, &x, &y), TENP_ERR_ARGUMENT);

  char* text = nullptr;
  ASSERT_EQ(tenp_placement_write(raw, &text), TENP_OK);
  const std::string written = Take(text);
  EXPECT_THAT(written, StartsWith("verdict,SATISFIABLE\nsensor,x,y\n"));
  tenp_placement* parsed_raw = nullptr;
  ASSERT_EQ(tenp_placement_parse(written.c_str(), &parsed_raw), TENP_OK);
  PlacementPtr parsed(parsed_raw);
  EXPECT_EQ(tenp_placement_validate(parsed_raw, inst.get()), TENP_OK);

  tenp_metrics a{}, b{};
  char* json = nullptr;
  ASSERT_EQ(tenp_simulate(inst.get(), raw, 0, &a, &json), TENP_OK);
  EXPECT_THAT(Take(json), HasSubstr("per_sensor_charge"));
  ASSERT_EQ(tenp_simulate(inst.get(), parsed_raw, 0, &b, nullptr), TENP_OK);
  EXPECT_EQ(a.avg_harvested_charge, b.avg_harvested_charge);
  EXPECT_EQ(a.avg_task_utility, b.avg_task_utility);
  EXPECT_EQ(tenp_simulate(inst.get(), raw, 15, &a, nullptr), TENP_ERR_ARGUMENT);

  tenp_placement* bogus = nullptr;
  ASSERT_EQ(tenp_placement_parse("verdict,SATISFIABLE\nsensor,x,y\n99,1,2\n", &bogus),
            TENP_OK);
  PlacementPtr bogus_owned(bogus);
  EXPECT_EQ(tenp_placement_validate(bogus, inst.get()), TENP_ERR_VALIDATION);
  EXPECT_EQ(tenp_placement_parse("nonsense", &bogus), TENP_ERR_PARSE);
}

TEST(CApiTest, DerivedInstancesAndGrids) {
  auto inst = Load();
  double lo = 0, hi = 0;
  ASSERT_EQ(tenp_charge_bounds(inst.get(), &lo, &hi), TENP_OK);
  EXPECT_LT(lo, hi);

  std::vector<double> grid(18);
  ASSERT_EQ(tenp_lambda_grid(inst.get(), grid.size(), grid.data()), TENP_OK);
  EXPECT_EQ(grid.front(), lo);
  EXPECT_EQ(grid.back(), hi);

  tenp_instance* above = nullptr;
  ASSERT_EQ(tenp_instance_with_lambda(inst.get(), hi + 1, &above), TENP_OK);
  InstancePtr above_owned(above);
  tenp_placement* p = nullptr;
  ASSERT_EQ(tenp_solve(above, &p), TENP_OK);
  PlacementPtr p_owned(p);
  EXPECT_EQ(tenp_placement_satisfiable(p), 0);

  tenp_instance* tsp = nullptr;
  ASSERT_EQ(tenp_instance_with_variant(inst.get(), TENP_VARIANT_TSP, &tsp), TENP_OK);
  InstancePtr tsp_owned(tsp);
  char* csv = nullptr;
  EXPECT_EQ(tenp_sweep_csv(tsp, TENP_AXIS_LAMBDA, grid.data(), grid.size(), 10, &csv,
                           nullptr),
            TENP_ERR_ARGUMENT);

  std::vector<double> us(16);
  ASSERT_EQ(tenp_utility_grid(0.10, 0.25, us.size(), us.data()), TENP_OK);
  EXPECT_EQ(us[10], 0.2);
  int nonmono = -1;
  ASSERT_EQ(tenp_sweep_csv(tsp, TENP_AXIS_UTILITY, us.data(), us.size(), 10, &csv,
                           &nonmono),
            TENP_OK);
  EXPECT_THAT(Take(csv), StartsWith("param,verdict,placed,avg_charge,avg_utility,stall_id\n"));
  EXPECT_EQ(nonmono, 0);

  ASSERT_EQ(tenp_summary_csv(inst.get(), grid.data(), grid.size(), us.data(), us.size(),
                             10, &csv),
            TENP_OK);
  const std::string summary = Take(csv);
  EXPECT_THAT(summary, StartsWith("variant,max_avg_utility,max_avg_charge\nTENP,"));
  EXPECT_THAT(summary, HasSubstr("\nESP,"));
  EXPECT_THAT(summary, HasSubstr("\nTSP,"));
}

TEST(CApiTest, WitnessAndOracle) {
  tenp_instance* w = nullptr;
  ASSERT_EQ(tenp_witness(1, 0, &w), TENP_OK);
  EXPECT_EQ(w, nullptr);
  ASSERT_EQ(tenp_witness(1, 100000, &w), TENP_OK);
  ASSERT_NE(w, nullptr);
  InstancePtr owned(w);

  tenp_placement* greedy = nullptr;
  ASSERT_EQ(tenp_solve(w, &greedy), TENP_OK);
  PlacementPtr greedy_owned(greedy);
  EXPECT_EQ(tenp_placement_satisfiable(greedy), 0);

  char* json = nullptr;
  ASSERT_EQ(tenp_oracle(w, 10'000'000, &json), TENP_OK);
  EXPECT_THAT(Take(json), HasSubstr("\"verdict\": \"SATISFIABLE\""));
}

TEST(CApiTest, FreeFunctionsAcceptNull) {
  tenp_instance_free(nullptr);
  tenp_placement_free(nullptr);
  tenp_string_free(nullptr);
}

}  // namespace
