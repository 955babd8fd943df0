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

// Seeded generator of small random instances, used by the witness search and
// by the property suites. Draws come straight from std::mt19937_64 (whose
// output sequence is fixed by the standard), never from the
// implementation-defined std distributions, so a seed names the same
// instances on every platform.

#ifndef TENP_RANDOM_INSTANCE_H_
#define TENP_RANDOM_INSTANCE_H_

#include <cstdint>
#include <random>

#include "tenp/model.h"

namespace tenp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int Uniform(int lo, int hi);
  // Uniform real in [0, 1).
  double Unit();

 private:
  std::mt19937_64 engine_;
};

struct RandomInstanceOptions {
  int min_grid = 2;
  int max_grid = 4;
  int max_tasks = 2;
  int max_ets = 2;
  int max_sensors = 3;
};

ProblemInstance RandomInstance(Rng& rng, const RandomInstanceOptions& opts);

}  // namespace tenp

#endif  // TENP_RANDOM_INSTANCE_H_
