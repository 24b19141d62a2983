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

#ifndef SDWANLAB_SIM_NETWORK_H_
#define SDWANLAB_SIM_NETWORK_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdwanlab/address.h"
#include "sdwanlab/sim/device_config.h"
#include "sdwanlab/sim/types.h"

namespace sdwanlab::sim {

struct AreaInfo {
  std::string name;
  bool provider = false;
  uint32_t as_number = 0;
  Prefix prefix;
};

struct Node {
  NodeId id;
  Role role = Role::kHost;
  std::string area;
  // Physical ports in declaration order. Addresses live in config.
  std::vector<std::string> ports;
  DeviceConfig config;
  ManagementMode mode = ManagementMode::kLocal;
  std::string serial;
  double processing_delay_ms = 0.1;
  HardwareProfile hardware;

  // Device-local SD-WAN state, mirrored by the controller inventory.
  OnboardingState onboarding_state = OnboardingState::kUnprovisioned;
  bool overlay_active = false;

  bool is_l3() const { return role != Role::kSwitch; }
  bool forwards() const { return role == Role::kRouter || role == Role::kEdge; }
  bool HasPort(std::string_view port) const;
  bool HasAddress(NetAddress address) const;
  std::optional<InterfaceAddress> AddressOf(std::string_view port) const;
  // First addressed interface outside the transport VPN, falling back to the
  // first addressed interface. Probes and replies use it.
  std::optional<NetAddress> PrimaryAddress() const;
  std::vector<NetAddress> Addresses() const;
};

struct Link {
  PortRef a;
  PortRef b;
  double latency_ms = 0.0;
  double jitter_ms = 0.0;
  double loss_pct = 0.0;
  uint32_t cost = 1;
};

// Topology plus per-device configuration. L2 structure (segments and switch
// forwarding) depends only on links and is rebuilt by Finalize().
class Network {
 public:
  void AddArea(AreaInfo area);
  void AddNode(Node node);
  void AddLink(Link link);
  // Computes segments and switch forwarding tables. Call after the last
  // AddNode/AddLink; config changes do not require it.
  void Finalize();

  const std::map<std::string, AreaInfo>& areas() const { return areas_; }
  const AreaInfo* FindArea(const std::string& name) const;
  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const Node* FindNode(const NodeId& id) const;
  Node* FindNode(const NodeId& id);
  const Node& node(const NodeId& id) const;
  Node& node(const NodeId& id);
  const std::vector<Link>& links() const { return links_; }

  const Link* LinkAt(const PortRef& port) const;
  std::optional<PortRef> Peer(const PortRef& port) const;
  // True when the link on this port joins nodes of different areas.
  bool IsInterAreaPort(const PortRef& port) const;

  // Segment id of a linked port, or -1.
  int SegmentOf(const PortRef& port) const;
  // L3 ports (non-switch) attached to a segment.
  const std::vector<PortRef>& SegmentPorts(int segment) const;
  // Address resolution inside the segment of `from`.
  std::optional<PortRef> ResolveAddress(const PortRef& from,
                                        NetAddress target) const;
  // Port on switch `sw` leading toward L3 port `target` in the same segment.
  std::optional<std::string> SwitchNextPort(const NodeId& sw,
                                            const PortRef& target) const;
  // Node owning an address, if any.
  std::optional<NodeId> OwnerOf(NetAddress address) const;

 private:
  void BuildSwitchTables(int segment);

  std::map<std::string, AreaInfo> areas_;
  std::map<NodeId, Node> nodes_;
  std::vector<Link> links_;
  std::map<PortRef, size_t> port_link_;
  std::map<PortRef, int> segment_of_;
  std::vector<std::vector<PortRef>> segment_l3_ports_;
  std::map<std::pair<NodeId, PortRef>, std::string> switch_next_port_;
};

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_NETWORK_H_
