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

#ifndef TENP_RADIO_PARAMS_H_
#define TENP_RADIO_PARAMS_H_

namespace tenp {

// Charge is measured in "charge units": the dB-domain power margin
// (transmit power - path loss - reception power) multiplied by the charging
// window in seconds and the circuit efficiency. It may be negative.
using ChargeUnits = double;

struct RadioParams {
  double tx_power_dbm = 50.0;      // ET transmit power
  double freq_ghz = 2.0;           // carrier frequency
  double path_loss_rate = 2.0;     // log-distance exponent, 2..6
  double ref_distance_m = 5.0;     // reference distance for free-space loss
  double charge_efficiency = 0.5;  // charging circuit efficiency, (0, 1]
  double frame_s = 10.0;           // frame length
  double op_time_s = 9.5;          // network operation time inside a frame
  double rx_power_dbm = 30.0;      // power spent by a sensor on reception

  double charging_window_s() const { return frame_s - op_time_s; }

  // Throws Error(kValidation) naming the offending field.
  void Validate() const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

}  // namespace tenp

#endif  // TENP_RADIO_PARAMS_H_
