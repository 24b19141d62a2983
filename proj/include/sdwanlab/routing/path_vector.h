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

#ifndef SDWANLAB_ROUTING_PATH_VECTOR_H_
#define SDWANLAB_ROUTING_PATH_VECTOR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sdwanlab/address.h"
#include "sdwanlab/sim/types.h"

namespace sdwanlab::routing {

inline constexpr uint32_t kMinPrivateAs = 64512;
inline constexpr uint32_t kMaxPrivateAs = 65535;

inline bool IsPrivateAs(uint32_t as) {
  return as >= kMinPrivateAs && as <= kMaxPrivateAs;
}

struct BgpSpeaker {
  NodeId id;
  uint32_t asn = 0;
  NetAddress router_id;
  std::vector<Prefix> originate;
};

// A session between two speakers. Same AS means internal: routes pass
// unchanged and are not re-advertised to other internal peers.
struct BgpPeering {
  NodeId a;
  NodeId b;
  NetAddress a_address;  // how b addresses a
  NetAddress b_address;  // how a addresses b
};

struct BgpPath {
  Prefix prefix;
  std::vector<uint32_t> as_path;  // nearest AS first
  std::optional<NodeId> learned_from;
  NetAddress neighbor_address;
  bool internal = false;

  bool local() const { return !learned_from.has_value(); }
  friend bool operator==(const BgpPath&, const BgpPath&) = default;
};

struct PathVectorResult {
  std::map<NodeId, std::map<Prefix, BgpPath>> best;
  int rounds = 0;
};

// Iterates advertisements to a fixpoint. A speaker rejects any path that
// already contains its own AS. Preference: locally originated, then shortest
// as_path, then external over internal, then lowest neighbor address. Throws
// Error(kNonConvergence) if no fixpoint is reached within a bound
// proportional to the speaker count.
PathVectorResult ComputePathVector(std::span<const BgpSpeaker> speakers,
                                   std::span<const BgpPeering> peerings);

}  // namespace sdwanlab::routing

#endif  // SDWANLAB_ROUTING_PATH_VECTOR_H_
