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

#ifndef SDWANLAB_SIM_SIMULATOR_H_
#define SDWANLAB_SIM_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sdwanlab/routing/rib.h"
#include "sdwanlab/sim/event_queue.h"
#include "sdwanlab/sim/forwarding.h"
#include "sdwanlab/sim/network.h"
#include "sdwanlab/sim/packet.h"

namespace sdwanlab::sim {

struct SimSettings {
  int initial_ttl = kDefaultInitialTtl;
  double tunnel_delay_ms = 1.0;
  bool edge_to_edge_tunnels = false;
  uint64_t seed = 1;
  bool record_trace = true;
};

struct SimStats {
  uint64_t transmitted = 0;
  uint64_t delivered = 0;
  uint64_t lost = 0;
  uint64_t ttl_expired = 0;
  uint64_t no_route = 0;
  uint64_t filtered = 0;
  // Must stay zero: a packet put on a wire by an L3 node with ttl <= 0.
  uint64_t nonpositive_ttl_sent = 0;
};

// Exponentially decayed count of packets/operations handled by a node.
struct NodeActivity {
  double load = 0.0;
  double last_ms = 0.0;
  uint64_t events = 0;
};

// Result of walking forwarding state hop by hop without advancing time.
struct PathTrace {
  bool delivered = false;
  std::vector<NodeId> hops;  // every node touched, source first
  int final_ttl = 0;
  int ttl_decrements = 0;
  int tunnel_hops = 0;
  double one_way_delay_ms = 0.0;  // latency + processing, jitter excluded
  std::string failure;
};

class Simulator {
 public:
  // Called for every packet a node consumes (after its processing delay).
  using Listener =
      std::function<void(const NodeId& at, const Packet& packet, double now)>;

  Simulator(Network network, SimSettings settings);

  Network& network() { return network_; }
  const Network& network() const { return network_; }
  const SimSettings& settings() const { return settings_; }
  SimSettings& mutable_settings() { return settings_; }
  EventQueue& events() { return events_; }
  const EventQueue& events() const { return events_; }
  double now() const { return events_.now(); }

  // Recomputes every RIB from current device configs. Leaves the previous
  // RIBs in place if routing fails.
  void Converge();
  const routing::Rib& RibOf(const NodeId& id) const;
  const std::map<NodeId, routing::Rib>& ribs() const { return ribs_; }
  const OverlayPolicy& overlay() const { return overlay_; }
  void RefreshOverlay();

  void Reseed(uint64_t seed);

  // Originates `packet` at `node` now; it leaves after the node's
  // processing delay.
  void Send(const NodeId& node, Packet packet);
  void RunUntilIdle() { events_.RunUntilIdle(); }

  int AddListener(Listener listener);
  void RemoveListener(int token);

  PathTrace TracePath(const NodeId& src, NetAddress dst) const;
  // True when src reaches dst's primary address and the reply comes back.
  bool Reachable(const NodeId& src, const NodeId& dst) const;

  void RecordActivity(const NodeId& id);
  NodeActivity ActivityOf(const NodeId& id) const;

  const SimStats& stats() const { return stats_; }
  const std::vector<std::string>& trace() const { return trace_; }
  void ClearTrace() { trace_.clear(); }

 private:
  void Originate(const NodeId& node, Packet packet, double at);
  void Execute(const NodeId& node, const ForwardingAction& action, double at);
  void TransmitFrame(const PortRef& out, Frame frame, double depart);
  void Arrive(const PortRef& port, const Frame& frame);
  void Consume(const NodeId& node, const Packet& packet);
  void EmitError(const NodeId& node, const Packet& cause, PacketKind kind,
                 double at);
  void Record(double at, const NodeId& node, std::string_view verb,
              const Packet& packet);
  void NoteActivity(const NodeId& id, double at);
  double HandlingDelay(const Node& node, int tunnel_hops) const;

  Network network_;
  SimSettings settings_;
  EventQueue events_;
  std::map<NodeId, routing::Rib> ribs_;
  OverlayPolicy overlay_;
  std::mt19937_64 rng_;
  std::map<int, Listener> listeners_;
  int next_listener_ = 0;
  std::map<NodeId, NodeActivity> activity_;
  SimStats stats_;
  std::vector<std::string> trace_;
};

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_SIMULATOR_H_
