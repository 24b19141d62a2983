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

#ifndef SDWANLAB_SIM_FORWARDING_H_
#define SDWANLAB_SIM_FORWARDING_H_

#include <set>
#include <string>
#include <string_view>

#include "sdwanlab/routing/rib.h"
#include "sdwanlab/sim/network.h"
#include "sdwanlab/sim/packet.h"

namespace sdwanlab::sim {

// Which traffic rides the overlay. Controller traffic always does once an edge
// has its tunnel endpoint up; edge-to-edge traffic only when enabled.
struct OverlayPolicy {
  std::set<NetAddress> controller_addresses;
  std::set<NetAddress> edge_addresses;
  bool edge_to_edge = false;

  bool Carries(const Packet& packet) const;
};

enum class ForwardKind {
  kDeliver,      // consumed by this node
  kForward,      // routed out of an L3 port toward next_hop
  kRelay,        // switched out of a port toward l2_dst, unchanged
  kTtlExceeded,  // ttl ran out here
  kNoRoute,      // no RIB entry
  kDrop,         // not for this node (L2 filter, host not owning dst)
};

std::string_view ForwardKindName(ForwardKind kind);

struct ForwardingAction {
  ForwardKind kind = ForwardKind::kDrop;
  // Packet as it leaves (ttl already decremented).
  Packet packet;
  std::string out_port;
  // L3 target to resolve on out_port's segment (kForward).
  NetAddress next_hop;
  // L2 target (kRelay).
  PortRef l2_dst;
  // Virtual tunnel-endpoint hops traversed at this node (0, 1 or 2).
  int tunnel_hops = 0;
};

// Handling of a frame that arrived on `in_port` of `node`.
// Hosts and controllers consume what is addressed to them; switches relay
// without touching ttl; routers and edges decrement ttl once and route.
// An edge with an active overlay endpoint adds one extra decrement when an
// overlay packet crosses its transport interface in either direction.
ForwardingAction Forward(const Network& network, const Node& node,
                         const routing::Rib& rib, const OverlayPolicy& overlay,
                         const Frame& frame, std::string_view in_port);

// Routing decision for a packet originated by `node` itself (no ttl
// decrement except for an outbound tunnel hop).
ForwardingAction RouteOriginated(const Node& node, const routing::Rib& rib,
                                 const OverlayPolicy& overlay, Packet packet);

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_FORWARDING_H_
