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

#include "sdwanlab/sim/forwarding.h"

namespace sdwanlab::sim {
namespace {

bool IsTransport(const Node& node, std::string_view port) {
  const auto* iface = node.config.FindInterface(port);
  return iface != nullptr && iface->vpn == kTransportVpn;
}

bool TunnelsAt(const Node& node, std::string_view port,
               const OverlayPolicy& overlay, const Packet& packet) {
  return node.role == Role::kEdge && node.overlay_active &&
         IsTransport(node, port) && overlay.Carries(packet);
}

// Decrements ttl for one hop; false when the packet expires here.
bool SpendHop(Packet& packet) {
  if (packet.ttl <= 1) return false;
  --packet.ttl;
  return true;
}

ForwardingAction Routed(const Node& node, const routing::Rib& rib,
                        const OverlayPolicy& overlay, ForwardingAction action) {
  const routing::RouteEntry* route = rib.Lookup(action.packet.dst);
  if (route == nullptr) {
    action.kind = ForwardKind::kNoRoute;
    return action;
  }
  action.out_port = route->out_port;
  action.next_hop = route->next_hop.value_or(action.packet.dst);
  if (TunnelsAt(node, action.out_port, overlay, action.packet)) {
    ++action.tunnel_hops;
    if (!SpendHop(action.packet)) {
      action.kind = ForwardKind::kTtlExceeded;
      return action;
    }
  }
  action.kind = ForwardKind::kForward;
  return action;
}

}  // namespace

bool OverlayPolicy::Carries(const Packet& packet) const {
  if (controller_addresses.count(packet.src) != 0 ||
      controller_addresses.count(packet.dst) != 0) {
    return true;
  }
  return edge_to_edge && edge_addresses.count(packet.src) != 0 &&
         edge_addresses.count(packet.dst) != 0;
}

std::string_view ForwardKindName(ForwardKind kind) {
  switch (kind) {
    case ForwardKind::kDeliver: return "deliver";
    case ForwardKind::kForward: return "forward";
    case ForwardKind::kRelay: return "relay";
    case ForwardKind::kTtlExceeded: return "ttl-exceeded";
    case ForwardKind::kNoRoute: return "no-route";
    case ForwardKind::kDrop: return "drop";
  }
  return "unknown";
}

ForwardingAction Forward(const Network& network, const Node& node,
                         const routing::Rib& rib, const OverlayPolicy& overlay,
                         const Frame& frame, std::string_view in_port) {
  ForwardingAction action;
  action.packet = frame.packet;

  if (node.role == Role::kSwitch) {
    auto out = network.SwitchNextPort(node.id, frame.l2_dst);
    if (!out) return action;
    action.kind = ForwardKind::kRelay;
    action.out_port = *out;
    action.l2_dst = frame.l2_dst;
    return action;
  }

  if (frame.l2_dst.node != node.id || frame.l2_dst.port != in_port) {
    return action;
  }
  if (TunnelsAt(node, in_port, overlay, action.packet)) {
    ++action.tunnel_hops;
    if (!SpendHop(action.packet)) {
      action.kind = ForwardKind::kTtlExceeded;
      return action;
    }
  }
  if (node.HasAddress(action.packet.dst)) {
    action.kind = ForwardKind::kDeliver;
    return action;
  }
  if (!node.forwards()) return action;
  if (!SpendHop(action.packet)) {
    action.kind = ForwardKind::kTtlExceeded;
    return action;
  }
  return Routed(node, rib, overlay, std::move(action));
}

ForwardingAction RouteOriginated(const Node& node, const routing::Rib& rib,
                                 const OverlayPolicy& overlay, Packet packet) {
  ForwardingAction action;
  action.packet = packet;
  return Routed(node, rib, overlay, std::move(action));
}

}  // namespace sdwanlab::sim
