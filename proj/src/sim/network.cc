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

#include "sdwanlab/sim/network.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "sdwanlab/error.h"

namespace sdwanlab::sim {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Join(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

bool Node::HasPort(std::string_view port) const {
  return std::find(ports.begin(), ports.end(), port) != ports.end();
}

bool Node::HasAddress(NetAddress address) const {
  for (const auto& iface : config.interfaces) {
    if (iface.address && iface.address->address == address) return true;
  }
  return false;
}

std::optional<InterfaceAddress> Node::AddressOf(std::string_view port) const {
  const auto* iface = config.FindInterface(port);
  if (iface == nullptr) return std::nullopt;
  return iface->address;
}

std::optional<NetAddress> Node::PrimaryAddress() const {
  std::optional<NetAddress> fallback;
  for (const auto& port : ports) {
    const auto* iface = config.FindInterface(port);
    if (iface == nullptr || !iface->address) continue;
    if (iface->vpn != kTransportVpn) return iface->address->address;
    if (!fallback) fallback = iface->address->address;
  }
  return fallback;
}

std::vector<NetAddress> Node::Addresses() const {
  std::vector<NetAddress> out;
  for (const auto& iface : config.interfaces) {
    if (iface.address) out.push_back(iface.address->address);
  }
  return out;
}

void Network::AddArea(AreaInfo area) {
  std::string name = area.name;
  areas_[name] = std::move(area);
}

void Network::AddNode(Node node) {
  if (nodes_.count(node.id) != 0) {
    throw Error(ErrorCode::kValidationError,
                "duplicate node id " + node.id.str());
  }
  NodeId id = node.id;
  nodes_.emplace(std::move(id), std::move(node));
}

void Network::AddLink(Link link) {
  for (const PortRef* end : {&link.a, &link.b}) {
    const Node* n = FindNode(end->node);
    if (n == nullptr) {
      throw Error(ErrorCode::kValidationError,
                  "link endpoint references unknown node " + end->node.str());
    }
    if (!n->HasPort(end->port)) {
      throw Error(ErrorCode::kValidationError,
                  "link endpoint references unknown port " + end->ToString());
    }
    if (port_link_.count(*end) != 0) {
      throw Error(ErrorCode::kValidationError,
                  "port already linked: " + end->ToString());
    }
  }
  if (link.a.node == link.b.node) {
    throw Error(ErrorCode::kValidationError,
                "link endpoints must be distinct nodes: " + link.a.ToString());
  }
  port_link_[link.a] = links_.size();
  port_link_[link.b] = links_.size();
  links_.push_back(std::move(link));
}

void Network::Finalize() {
  segment_of_.clear();
  segment_l3_ports_.clear();
  switch_next_port_.clear();

  std::vector<PortRef> ports;
  ports.reserve(port_link_.size());
  for (const auto& [port, index] : port_link_) ports.push_back(port);
  std::map<PortRef, size_t> index_of;
  for (size_t i = 0; i < ports.size(); ++i) index_of[ports[i]] = i;

  DisjointSets sets(ports.size());
  for (const auto& link : links_) sets.Join(index_of[link.a], index_of[link.b]);
  // A switch bridges all of its ports.
  std::map<NodeId, size_t> first_switch_port;
  for (size_t i = 0; i < ports.size(); ++i) {
    if (node(ports[i].node).role != Role::kSwitch) continue;
    auto [it, inserted] = first_switch_port.emplace(ports[i].node, i);
    if (!inserted) sets.Join(it->second, i);
  }

  std::map<size_t, int> segment_ids;
  for (size_t i = 0; i < ports.size(); ++i) {
    size_t root = sets.Find(i);
    auto [it, inserted] =
        segment_ids.emplace(root, static_cast<int>(segment_ids.size()));
    if (inserted) segment_l3_ports_.emplace_back();
    segment_of_[ports[i]] = it->second;
    if (node(ports[i].node).is_l3()) {
      segment_l3_ports_[it->second].push_back(ports[i]);
    }
  }
  for (int s = 0; s < static_cast<int>(segment_l3_ports_.size()); ++s) {
    BuildSwitchTables(s);
  }
}

// Shortest paths (latency, then hop count, then switch id) from every switch
// of the segment toward each attached L3 port.
void Network::BuildSwitchTables(int segment) {
  using Key = std::tuple<double, int, NodeId>;
  for (const PortRef& target : segment_l3_ports_[segment]) {
    auto first = Peer(target);
    if (!first || node(first->node).role != Role::kSwitch) continue;
    std::map<NodeId, std::pair<double, int>> best;
    std::map<NodeId, std::string> via;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
    const Link* first_link = LinkAt(target);
    best[first->node] = {first_link->latency_ms, 1};
    via[first->node] = first->port;
    frontier.emplace(first_link->latency_ms, 1, first->node);
    std::map<NodeId, bool> done;
    while (!frontier.empty()) {
      auto [dist, hops, sw] = frontier.top();
      frontier.pop();
      if (done[sw]) continue;
      done[sw] = true;
      for (const auto& port : node(sw).ports) {
        auto peer = Peer(PortRef{sw, port});
        if (!peer || node(peer->node).role != Role::kSwitch) continue;
        if (done[peer->node]) continue;
        double next_dist = dist + LinkAt(PortRef{sw, port})->latency_ms;
        std::pair<double, int> candidate{next_dist, hops + 1};
        auto it = best.find(peer->node);
        if (it == best.end() || candidate < it->second) {
          best[peer->node] = candidate;
          via[peer->node] = peer->port;
          frontier.emplace(next_dist, hops + 1, peer->node);
        }
      }
    }
    for (const auto& [sw, port] : via) {
      switch_next_port_[{sw, target}] = port;
    }
  }
}

const AreaInfo* Network::FindArea(const std::string& name) const {
  auto it = areas_.find(name);
  return it == areas_.end() ? nullptr : &it->second;
}

const Node* Network::FindNode(const NodeId& id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

Node* Network::FindNode(const NodeId& id) {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Node& Network::node(const NodeId& id) const {
  const Node* n = FindNode(id);
  if (n == nullptr) {
    throw Error(ErrorCode::kUnknownDevice, "unknown device " + id.str());
  }
  return *n;
}

Node& Network::node(const NodeId& id) {
  Node* n = FindNode(id);
  if (n == nullptr) {
    throw Error(ErrorCode::kUnknownDevice, "unknown device " + id.str());
  }
  return *n;
}

const Link* Network::LinkAt(const PortRef& port) const {
  auto it = port_link_.find(port);
  return it == port_link_.end() ? nullptr : &links_[it->second];
}

std::optional<PortRef> Network::Peer(const PortRef& port) const {
  const Link* link = LinkAt(port);
  if (link == nullptr) return std::nullopt;
  return link->a == port ? link->b : link->a;
}

bool Network::IsInterAreaPort(const PortRef& port) const {
  auto peer = Peer(port);
  if (!peer) return false;
  return node(port.node).area != node(peer->node).area;
}

int Network::SegmentOf(const PortRef& port) const {
  auto it = segment_of_.find(port);
  return it == segment_of_.end() ? -1 : it->second;
}

const std::vector<PortRef>& Network::SegmentPorts(int segment) const {
  static const std::vector<PortRef> kEmpty;
  if (segment < 0 || segment >= static_cast<int>(segment_l3_ports_.size())) {
    return kEmpty;
  }
  return segment_l3_ports_[segment];
}

std::optional<PortRef> Network::ResolveAddress(const PortRef& from,
                                               NetAddress target) const {
  for (const PortRef& candidate : SegmentPorts(SegmentOf(from))) {
    if (candidate == from) continue;
    auto address = node(candidate.node).AddressOf(candidate.port);
    if (address && address->address == target) return candidate;
  }
  return std::nullopt;
}

std::optional<std::string> Network::SwitchNextPort(
    const NodeId& sw, const PortRef& target) const {
  auto it = switch_next_port_.find({sw, target});
  if (it == switch_next_port_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> Network::OwnerOf(NetAddress address) const {
  for (const auto& [id, n] : nodes_) {
    if (n.HasAddress(address)) return id;
  }
  return std::nullopt;
}

}  // namespace sdwanlab::sim
