// Copyright 2026 The sdwanlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDWANLAB_SIM_LINK_MODEL_H_
#define SDWANLAB_SIM_LINK_MODEL_H_

#include <random>

#include "sdwanlab/sim/network.h"

namespace sdwanlab::sim {

// Uniform double in [0, 1) from the top 53 bits. Unlike
// std::uniform_real_distribution this is identical on every standard library.
inline double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Transmission {
  bool dropped = false;
  double delay_ms = 0.0;
};

// Drop with probability loss_pct/100, otherwise arrive after
// latency + uniform(0, jitter). Draws from rng only for non-zero loss/jitter.
Transmission Transmit(const Link& link, std::mt19937_64& rng);

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_LINK_MODEL_H_
