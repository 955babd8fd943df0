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

// RF charging model: free-space loss at a reference distance, log-distance
// path loss beyond it, and the per-frame charge a sensor harvests from each
// energy transmitter. All logarithms are base 10.

#ifndef TENP_RADIO_H_
#define TENP_RADIO_H_

#include <span>

#include "tenp/model.h"
#include "tenp/radio_params.h"

namespace tenp {

// 20 log10(d0) + 20 log10(f) + 92.5, with d0 in meters and f in GHz.
double FreeSpacePathLoss(double d0_m, double f_ghz);

// FreeSpacePathLoss(d0, f) + 10 w log10(d / d0).
double LogDistancePathLoss(double d_m, const RadioParams& params);

// (T_E - PL(d) - P_r) * (T - tau) * eta. Not clamped at zero.
ChargeUnits ReceivedChargePerFrame(double d_m, const RadioParams& params);

// Sum of ReceivedChargePerFrame over all ETs, with physical distance equal to
// the Manhattan distance times the cell size. Throws if `cell` sits on an ET.
ChargeUnits TotalReceivedCharge(const Cell& cell,
                                std::span<const EnergyTransmitter> ets,
                                const GridEnvironment& env,
                                const RadioParams& params);

struct ChargeBounds {
  ChargeUnits min = 0.0;
  ChargeUnits max = 0.0;
};

// Extremes of TotalReceivedCharge over every free cell.
ChargeBounds ComputeChargeBounds(const GridEnvironment& env,
                                 std::span<const EnergyTransmitter> ets,
                                 const RadioParams& params);

}  // namespace tenp

#endif  // TENP_RADIO_H_
