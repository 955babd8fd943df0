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

#include "tenp/radio.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "tenp/error.h"
#include "test_util.h"

namespace tenp {
namespace {

constexpr double kTol = 1e-9;

TEST(FreeSpacePathLossTest, ClosedForms) {
  EXPECT_NEAR(FreeSpacePathLoss(1, 1), 92.5, kTol);
  EXPECT_NEAR(FreeSpacePathLoss(5, 2), 112.5, kTol);  // log10(5)+log10(2) = 1
  EXPECT_NEAR(FreeSpacePathLoss(10, 10), 132.5, kTol);
}

TEST(FreeSpacePathLossTest, RejectsNonPositive) {
  EXPECT_THROW(FreeSpacePathLoss(0, 2), Error);
  EXPECT_THROW(FreeSpacePathLoss(5, -1), Error);
}

TEST(LogDistancePathLossTest, Examples) {
  const RadioParams p;  // d0 = 5 m, w = 2, f = 2 GHz
  EXPECT_EQ(LogDistancePathLoss(p.ref_distance_m, p),
            FreeSpacePathLoss(p.ref_distance_m, p.freq_ghz));
  EXPECT_NEAR(LogDistancePathLoss(50, p), 132.5, kTol);
  EXPECT_NEAR(LogDistancePathLoss(2.5, p), 112.5 - 20 * std::log10(2.0), kTol);
  EXPECT_NEAR(LogDistancePathLoss(2.5, p), 106.4794, 1e-4);
  EXPECT_THROW(LogDistancePathLoss(0, p), Error);
}

TEST(LogDistancePathLossTest, StrictlyIncreasingAndDoublingStep) {
  for (double w : {2.0, 3.5, 6.0}) {
    RadioParams p;
    p.path_loss_rate = w;
    double prev = LogDistancePathLoss(0.5, p);
    for (double d = 1.0; d < 200; d *= 1.37) {
      const double cur = LogDistancePathLoss(d, p);
      EXPECT_GT(cur, prev);
      prev = cur;
      EXPECT_NEAR(LogDistancePathLoss(2 * d, p) - cur,
                  10 * w * std::log10(2.0), 1e-9);
    }
  }
}

TEST(ReceivedChargePerFrameTest, TableOneValues) {
  const RadioParams p;
  // (50 - 112.5 - 30) * (10 - 9.5) * 0.5
  EXPECT_NEAR(ReceivedChargePerFrame(5, p), -23.125, kTol);
  // (50 - 132.5 - 30) * 0.5 * 0.5
  EXPECT_NEAR(ReceivedChargePerFrame(50, p), -28.125, kTol);
  EXPECT_LT(ReceivedChargePerFrame(50, p), ReceivedChargePerFrame(5, p));
}

TEST(RadioParamsTest, RejectsEmptyChargingWindow) {
  RadioParams p;
  p.op_time_s = p.frame_s;
  EXPECT_THROW(p.Validate(), Error);
  p = RadioParams{};
  p.charge_efficiency = 0;
  EXPECT_THROW(p.Validate(), Error);
  p = RadioParams{};
  p.path_loss_rate = 7;
  EXPECT_THROW(p.Validate(), Error);
  EXPECT_NO_THROW(RadioParams{}.Validate());
}

TEST(TotalReceivedChargeTest, Examples) {
  const RadioParams p;
  const auto env = GridEnvironment::Build(51, 1.0, {}, {{6, 1}, {51, 1}});
  const std::vector<EnergyTransmitter> none;
  EXPECT_EQ(TotalReceivedCharge({1, 1}, none, env, p), 0.0);
  const std::vector<EnergyTransmitter> one = {{1, {6, 1}}};
  EXPECT_NEAR(TotalReceivedCharge({1, 1}, one, env, p), -23.125, kTol);
  const std::vector<EnergyTransmitter> two = {{1, {6, 1}}, {2, {51, 1}}};
  EXPECT_NEAR(TotalReceivedCharge({1, 1}, two, env, p), -51.25, kTol);
  EXPECT_THROW(TotalReceivedCharge({6, 1}, two, env, p), Error);
}

TEST(TotalReceivedChargeTest, CellSizeScalesDistance) {
  const RadioParams p;
  const auto env = GridEnvironment::Build(3, 5.0, {}, {{2, 1}});
  const std::vector<EnergyTransmitter> ets = {{1, {2, 1}}};
  EXPECT_NEAR(TotalReceivedCharge({1, 1}, ets, env, p), -23.125, kTol);
}

TEST(TotalReceivedChargeTest, AdditiveOverEtSplits) {
  const auto loaded = testing::LoadTable2();
  const ProblemInstance& inst = loaded.instance;
  const auto ets = inst.ets();
  for (const Cell& c : inst.environment().free_cells()) {
    const double full = TotalReceivedCharge(c, ets, inst.environment(), inst.radio());
    for (std::size_t split = 0; split <= ets.size(); ++split) {
      const double parts =
          TotalReceivedCharge(c, ets.first(split), inst.environment(), inst.radio()) +
          TotalReceivedCharge(c, ets.subspan(split), inst.environment(), inst.radio());
      EXPECT_NEAR(parts, full, 1e-9 * std::abs(full));
    }
  }
}

TEST(TotalReceivedChargeTest, SingleEtChargeFallsWithDistance) {
  const RadioParams p;
  const auto env = GridEnvironment::Build(8, 1.0, {}, {{1, 1}});
  const std::vector<EnergyTransmitter> ets = {{1, {1, 1}}};
  for (const Cell& a : env.free_cells()) {
    for (const Cell& b : env.free_cells()) {
      if (ManhattanDistance(a, {1, 1}) < ManhattanDistance(b, {1, 1})) {
        EXPECT_GT(TotalReceivedCharge(a, ets, env, p),
                  TotalReceivedCharge(b, ets, env, p));
      }
    }
  }
}

TEST(ChargeBoundsTest, SingleFreeCell) {
  const RadioParams p;
  const auto env = GridEnvironment::Build(2, 1.0, {{1, 1}, {2, 2}}, {{2, 1}});
  const std::vector<EnergyTransmitter> ets = {{1, {2, 1}}};
  const ChargeBounds b = ComputeChargeBounds(env, ets, p);
  EXPECT_EQ(b.min, b.max);
  EXPECT_EQ(b.min, TotalReceivedCharge({1, 2}, ets, env, p));
}

TEST(ChargeBoundsTest, ThreeByThreeExtremes) {
  const RadioParams p;
  const auto env = GridEnvironment::Build(3, 1.0, {{1, 1}}, {{3, 3}});
  const std::vector<EnergyTransmitter> ets = {{1, {3, 3}}};
  const ChargeBounds b = ComputeChargeBounds(env, ets, p);
  // Free cells sit at ET distance 1 ((3,2), (2,3)) up to 3 ((2,1), (1,2)).
  EXPECT_EQ(b.max, ReceivedChargePerFrame(1, p));
  EXPECT_EQ(b.min, ReceivedChargePerFrame(3, p));
}

TEST(ChargeBoundsTest, Table2BoundsAreStrict) {
  const auto loaded = testing::LoadTable2();
  const auto& inst = loaded.instance;
  const ChargeBounds b =
      ComputeChargeBounds(inst.environment(), inst.ets(), inst.radio());
  EXPECT_LT(b.min, b.max);
}

TEST(ChargeBoundsTest, EmptyFreeSetRejected) {
  const auto env = GridEnvironment::Build(1, 1.0, {{1, 1}}, {});
  EXPECT_THROW(ComputeChargeBounds(env, {}, RadioParams{}), Error);
}

}  // namespace
}  // namespace tenp
