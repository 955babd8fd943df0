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

#ifndef TENP_SIM_H_
#define TENP_SIM_H_

#include <functional>
#include <vector>

#include "tenp/model.h"
#include "tenp/radio_params.h"

namespace tenp {

struct SimMetrics {
  // Sum of per-frame charges over sensors, divided by |N| * T.
  double avg_harvested_charge = 0.0;
  // Sum of all sensor utilities, divided by the number of tasks.
  double avg_task_utility = 0.0;
  // Per-frame charge of each sensor, in partition order.
  std::vector<ChargeUnits> per_sensor_charge;
  // Summed utility of each task's sensors, in task order.
  std::vector<double> per_task_utility;
};

// Placeholder for sensing and data transmission. Does nothing.
void PerformNetworkOperation();

using NetworkHook = std::function<void()>;

// Runs the frame loop in one-second steps. Every frame opens with a charging
// window of T - tau seconds, during which each sensor accrues the charge of
// its cell; every remaining step of the frame invokes `network_hook`. Steps
// are integral, so a frame of T seconds spends ceil(T - tau) steps charging.
//
// Requires a total placement, an integral frame length and a simulation time
// that is a positive multiple of it.
SimMetrics Simulate(const Placement& placement,
                    const ProblemInstance& instance, double simulation_time_s,
                    const NetworkHook& network_hook = PerformNetworkOperation);

}  // namespace tenp

#endif  // TENP_SIM_H_
