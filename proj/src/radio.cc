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

#include <algorithm>
#include <cmath>
#include <string>

#include "tenp/error.h"

namespace tenp {
namespace {

void Require(bool ok, const char* field, const char* rule) {
  if (!ok) Fail(ErrorCode::kValidation, std::string("radio.") + field + " " + rule);
}

}  // namespace

void RadioParams::Validate() const {
  Require(std::isfinite(tx_power_dbm), "tx_power_dbm", "must be finite");
  Require(std::isfinite(rx_power_dbm), "rx_power_dbm", "must be finite");
  Require(std::isfinite(freq_ghz) && freq_ghz > 0, "freq_ghz",
          "must be positive");
  Require(path_loss_rate >= 2 && path_loss_rate <= 6, "path_loss_rate",
          "must lie in [2, 6]");
  Require(std::isfinite(ref_distance_m) && ref_distance_m > 0,
          "ref_distance_m", "must be positive");
  Require(charge_efficiency > 0 && charge_efficiency <= 1,
          "charge_efficiency", "must lie in (0, 1]");
  Require(std::isfinite(frame_s) && frame_s > 0, "frame_s",
          "must be positive");
  Require(op_time_s > 0 && op_time_s < frame_s, "op_time_s",
          "must lie strictly between 0 and frame_s");
}

double FreeSpacePathLoss(double d0_m, double f_ghz) {
  if (!(d0_m > 0) || !(f_ghz > 0)) {
    Fail(ErrorCode::kInvalidArgument,
         "free-space path loss needs positive distance and frequency");
  }
  return 20.0 * std::log10(d0_m) + 20.0 * std::log10(f_ghz) + 92.5;
}

double LogDistancePathLoss(double d_m, const RadioParams& params) {
  if (!(d_m > 0)) {
    Fail(ErrorCode::kInvalidArgument,
         "path loss distance must be positive, got " + std::to_string(d_m));
  }
  return FreeSpacePathLoss(params.ref_distance_m, params.freq_ghz) +
         10.0 * params.path_loss_rate *
             std::log10(d_m / params.ref_distance_m);
}

ChargeUnits ReceivedChargePerFrame(double d_m, const RadioParams& params) {
  const double margin_db =
      params.tx_power_dbm - LogDistancePathLoss(d_m, params) -
      params.rx_power_dbm;
  return margin_db * params.charging_window_s() * params.charge_efficiency;
}

ChargeUnits TotalReceivedCharge(const Cell& cell,
                                std::span<const EnergyTransmitter> ets,
                                const GridEnvironment& env,
                                const RadioParams& params) {
  ChargeUnits total = 0.0;
  for (const EnergyTransmitter& et : ets) {
    const int d = ManhattanDistance(cell, et.cell);
    if (d == 0) {
      Fail(ErrorCode::kInvalidArgument,
           "cell " + ToString(cell) + " coincides with ET " +
               std::to_string(et.id));
    }
    total += ReceivedChargePerFrame(d * env.cell_size_m(), params);
  }
  return total;
}

ChargeBounds ComputeChargeBounds(const GridEnvironment& env,
                                 std::span<const EnergyTransmitter> ets,
                                 const RadioParams& params) {
  const auto free = env.free_cells();
  if (free.empty()) {
    Fail(ErrorCode::kInvalidArgument, "charge bounds need a free cell");
  }
  ChargeBounds b;
  b.min = b.max = TotalReceivedCharge(free.front(), ets, env, params);
  for (const Cell& c : free.subspan(1)) {
    const ChargeUnits q = TotalReceivedCharge(c, ets, env, params);
    b.min = std::min(b.min, q);
    b.max = std::max(b.max, q);
  }
  return b;
}

}  // namespace tenp
