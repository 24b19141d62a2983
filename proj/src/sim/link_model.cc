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

#include "sdwanlab/sim/link_model.h"

namespace sdwanlab::sim {

Transmission Transmit(const Link& link, std::mt19937_64& rng) {
  if (link.loss_pct > 0.0 && UniformUnit(rng) * 100.0 < link.loss_pct) {
    return Transmission{true, 0.0};
  }
  double delay = link.latency_ms;
  if (link.jitter_ms > 0.0) delay += UniformUnit(rng) * link.jitter_ms;
  return Transmission{false, delay};
}

}  // namespace sdwanlab::sim
