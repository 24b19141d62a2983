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

#include "sdwanlab/sim/simulator.h"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "sdwanlab/error.h"
#include "sdwanlab/routing/control_plane.h"
#include "sdwanlab/sim/link_model.h"

namespace sdwanlab::sim {
namespace {

constexpr int kMaxPathSteps = 1024;

}  // namespace

Simulator::Simulator(Network network, SimSettings settings)
    : network_(std::move(network)), settings_(settings), rng_(settings.seed) {
  RefreshOverlay();
}

void Simulator::Converge() {
  ribs_ = routing::ComputeRibs(network_);
  RefreshOverlay();
}

void Simulator::RefreshOverlay() {
  overlay_ = OverlayPolicy();
  overlay_.edge_to_edge = settings_.edge_to_edge_tunnels;
  for (const auto& [id, node] : network_.nodes()) {
    if (IsController(node.role)) {
      for (NetAddress a : node.Addresses()) overlay_.controller_addresses.insert(a);
    } else if (node.role == Role::kEdge && node.overlay_active) {
      for (NetAddress a : node.Addresses()) overlay_.edge_addresses.insert(a);
    }
  }
}

const routing::Rib& Simulator::RibOf(const NodeId& id) const {
  static const routing::Rib kEmpty;
  auto it = ribs_.find(id);
  return it == ribs_.end() ? kEmpty : it->second;
}

void Simulator::Reseed(uint64_t seed) { rng_.seed(seed); }

int Simulator::AddListener(Listener listener) {
  int token = next_listener_++;
  listeners_.emplace(token, std::move(listener));
  return token;
}

void Simulator::RemoveListener(int token) { listeners_.erase(token); }

void Simulator::Send(const NodeId& node, Packet packet) {
  network_.node(node);  // throws on unknown ids
  Originate(node, packet, now());
}

double Simulator::HandlingDelay(const Node& node, int tunnel_hops) const {
  return node.processing_delay_ms + tunnel_hops * settings_.tunnel_delay_ms;
}

void Simulator::Originate(const NodeId& id, Packet packet, double at) {
  const Node& node = network_.node(id);
  NoteActivity(id, at);
  Record(at, id, "originate", packet);
  ForwardingAction action = RouteOriginated(node, RibOf(id), overlay_, packet);
  Execute(id, action, at + HandlingDelay(node, action.tunnel_hops));
}

void Simulator::Execute(const NodeId& id, const ForwardingAction& action,
                        double at) {
  switch (action.kind) {
    case ForwardKind::kForward: {
      PortRef out{id, action.out_port};
      auto target = network_.ResolveAddress(out, action.next_hop);
      if (!target) {
        ++stats_.no_route;
        Record(at, id, "unresolved", action.packet);
        EmitError(id, action.packet, PacketKind::kUnreachable, at);
        return;
      }
      TransmitFrame(out, Frame{action.packet, *target}, at);
      return;
    }
    case ForwardKind::kRelay:
      TransmitFrame(PortRef{id, action.out_port},
                    Frame{action.packet, action.l2_dst}, at);
      return;
    case ForwardKind::kDeliver: {
      Packet packet = action.packet;
      events_.Schedule(at, [this, id, packet] { Consume(id, packet); });
      return;
    }
    case ForwardKind::kTtlExceeded:
      ++stats_.ttl_expired;
      Record(at, id, "ttl-exceeded", action.packet);
      EmitError(id, action.packet, PacketKind::kTtlExceeded, at);
      return;
    case ForwardKind::kNoRoute:
      ++stats_.no_route;
      Record(at, id, "no-route", action.packet);
      EmitError(id, action.packet, PacketKind::kUnreachable, at);
      return;
    case ForwardKind::kDrop:
      ++stats_.filtered;
      Record(at, id, "drop", action.packet);
      return;
  }
}

void Simulator::TransmitFrame(const PortRef& out, Frame frame, double depart) {
  const Link* link = network_.LinkAt(out);
  auto peer = network_.Peer(out);
  if (link == nullptr || !peer) {
    ++stats_.filtered;
    Record(depart, out.node, "no-link", frame.packet);
    return;
  }
  if (network_.node(out.node).is_l3() && frame.packet.ttl <= 0) {
    ++stats_.nonpositive_ttl_sent;
  }
  ++stats_.transmitted;
  Transmission tx = Transmit(*link, rng_);
  if (tx.dropped) {
    ++stats_.lost;
    Record(depart, out.node, "lost", frame.packet);
    return;
  }
  PortRef to = *peer;
  events_.Schedule(depart + tx.delay_ms,
                   [this, to, frame] { Arrive(to, frame); });
}

void Simulator::Arrive(const PortRef& port, const Frame& frame) {
  const Node& node = network_.node(port.node);
  NoteActivity(port.node, now());
  ForwardingAction action = Forward(network_, node, RibOf(port.node), overlay_,
                                    frame, port.port);
  Record(now(), port.node, ForwardKindName(action.kind), frame.packet);
  Execute(port.node, action, now() + HandlingDelay(node, action.tunnel_hops));
}

void Simulator::Consume(const NodeId& id, const Packet& packet) {
  ++stats_.delivered;
  Record(now(), id, "consume", packet);
  if (packet.kind == PacketKind::kEchoRequest) {
    Packet reply = packet;
    reply.kind = PacketKind::kEchoReply;
    reply.src = packet.dst;
    reply.dst = packet.src;
    reply.ttl = settings_.initial_ttl;
    Originate(id, reply, now());
  }
  // Listeners may unregister themselves while being called.
  auto snapshot = listeners_;
  for (const auto& [token, listener] : snapshot) listener(id, packet, now());
}

void Simulator::EmitError(const NodeId& id, const Packet& cause,
                          PacketKind kind, double at) {
  if (cause.is_error()) return;
  auto source = network_.node(id).PrimaryAddress();
  if (!source) return;
  Packet error = cause;
  error.kind = kind;
  error.src = *source;
  error.dst = cause.src;
  error.ttl = settings_.initial_ttl;
  Originate(id, error, at);
}

void Simulator::Record(double at, const NodeId& node, std::string_view verb,
                       const Packet& packet) {
  if (!settings_.record_trace) return;
  std::ostringstream line;
  line << std::fixed << std::setprecision(6) << at << " " << node.str() << " "
       << verb << " " << packet.ToString();
  trace_.push_back(line.str());
}

void Simulator::NoteActivity(const NodeId& id, double at) {
  const Node& node = network_.node(id);
  NodeActivity& activity = activity_[id];
  double tau = node.hardware.cpu_decay_ms;
  if (activity.events == 0) {
    activity.load = 1.0;
    activity.last_ms = at;
  } else if (at >= activity.last_ms) {
    activity.load =
        activity.load * std::exp(-(at - activity.last_ms) / tau) + 1.0;
    activity.last_ms = at;
  } else {
    activity.load += std::exp(-(activity.last_ms - at) / tau);
  }
  ++activity.events;
}

void Simulator::RecordActivity(const NodeId& id) { NoteActivity(id, now()); }

NodeActivity Simulator::ActivityOf(const NodeId& id) const {
  auto it = activity_.find(id);
  return it == activity_.end() ? NodeActivity() : it->second;
}

PathTrace Simulator::TracePath(const NodeId& src, NetAddress dst) const {
  PathTrace trace;
  const Node* node = network_.FindNode(src);
  if (node == nullptr) {
    trace.failure = "unknown source " + src.str();
    return trace;
  }
  auto source = node->PrimaryAddress();
  if (!source) {
    trace.failure = src.str() + " has no address";
    return trace;
  }
  Packet packet;
  packet.src = *source;
  packet.dst = dst;
  packet.ttl = settings_.initial_ttl;
  trace.hops.push_back(src);
  ForwardingAction action = RouteOriginated(*node, RibOf(src), overlay_, packet);
  trace.one_way_delay_ms = HandlingDelay(*node, action.tunnel_hops);
  for (int step = 0; step < kMaxPathSteps; ++step) {
    trace.tunnel_hops += action.tunnel_hops;
    Frame frame{action.packet, {}};
    PortRef out{node->id, action.out_port};
    switch (action.kind) {
      case ForwardKind::kForward: {
        auto target = network_.ResolveAddress(out, action.next_hop);
        if (!target) {
          trace.failure = "next hop " + action.next_hop.ToString() +
                          " unresolved at " + node->id.str();
          return trace;
        }
        frame.l2_dst = *target;
        break;
      }
      case ForwardKind::kRelay:
        frame.l2_dst = action.l2_dst;
        break;
      case ForwardKind::kDeliver:
        trace.delivered = true;
        trace.final_ttl = action.packet.ttl;
        trace.ttl_decrements = settings_.initial_ttl - action.packet.ttl;
        return trace;
      default:
        trace.failure = std::string(ForwardKindName(action.kind)) + " at " +
                        node->id.str();
        return trace;
    }
    const Link* link = network_.LinkAt(out);
    auto peer = network_.Peer(out);
    if (link == nullptr || !peer) {
      trace.failure = "port " + out.ToString() + " has no link";
      return trace;
    }
    trace.one_way_delay_ms += link->latency_ms;
    node = &network_.node(peer->node);
    trace.hops.push_back(node->id);
    action = Forward(network_, *node, RibOf(node->id), overlay_, frame,
                     peer->port);
    trace.one_way_delay_ms += HandlingDelay(*node, action.tunnel_hops);
  }
  trace.failure = "forwarding loop";
  return trace;
}

bool Simulator::Reachable(const NodeId& src, const NodeId& dst) const {
  const Node* src_node = network_.FindNode(src);
  const Node* dst_node = network_.FindNode(dst);
  if (src_node == nullptr || dst_node == nullptr) return false;
  auto src_address = src_node->PrimaryAddress();
  auto dst_address = dst_node->PrimaryAddress();
  if (!src_address || !dst_address) return false;
  PathTrace there = TracePath(src, *dst_address);
  if (!there.delivered || there.hops.back() != dst) return false;
  PathTrace back = TracePath(dst, *src_address);
  return back.delivered && back.hops.back() == src;
}

}  // namespace sdwanlab::sim
