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

#include "sdwanlab/routing/control_plane.h"

#include <algorithm>
#include <optional>

#include "sdwanlab/error.h"

namespace sdwanlab::routing {
namespace {

using sim::Network;
using sim::Node;

bool IsLinked(const Network& network, const Node& node,
              const std::string& port) {
  return network.LinkAt(PortRef{node.id, port}) != nullptr;
}

// Addressed, linked, intra-area interfaces the IGP runs on.
std::vector<const InterfaceConfig*> IgpInterfaces(const Network& network,
                                                  const Node& node,
                                                  const IgpConfig& igp) {
  std::vector<const InterfaceConfig*> out;
  for (const auto& iface : node.config.interfaces) {
    if (!iface.address || !IsLinked(network, node, iface.name)) continue;
    if (network.IsInterAreaPort(PortRef{node.id, iface.name})) continue;
    if (igp.interfaces &&
        std::find(igp.interfaces->begin(), igp.interfaces->end(),
                  iface.name) == igp.interfaces->end()) {
      continue;
    }
    out.push_back(&iface);
  }
  return out;
}

RouteSource SourceFor(IgpProtocol protocol) {
  return protocol == IgpProtocol::kOspfLike ? RouteSource::kOspfLike
                                            : RouteSource::kEigrpLike;
}

std::vector<RouteEntry> ConnectedRoutes(const Network& network,
                                        const Node& node) {
  std::vector<RouteEntry> out;
  for (const auto& iface : node.config.interfaces) {
    if (!iface.address || !IsLinked(network, node, iface.name)) continue;
    RouteEntry entry;
    entry.prefix = iface.address->subnet();
    entry.source = RouteSource::kConnected;
    entry.admin_distance = AdminDistance(RouteSource::kConnected);
    entry.out_port = iface.name;
    out.push_back(entry);
  }
  return out;
}

// Statics resolve only against connected subnets; unresolvable ones are
// inactive, as on a real device.
std::vector<RouteEntry> StaticRoutes(const Network& network,
                                     const Node& node) {
  std::vector<RouteEntry> out;
  for (const auto& route : node.config.static_routes) {
    for (const auto& iface : node.config.interfaces) {
      if (!iface.address || !IsLinked(network, node, iface.name)) continue;
      if (!iface.address->subnet().Contains(route.next_hop)) continue;
      if (iface.address->address == route.next_hop) continue;
      RouteEntry entry;
      entry.prefix = route.prefix;
      entry.source = RouteSource::kStatic;
      entry.admin_distance = AdminDistance(RouteSource::kStatic);
      entry.out_port = iface.name;
      entry.next_hop = route.next_hop;
      if (auto peer = network.ResolveAddress(PortRef{node.id, iface.name},
                                             route.next_hop)) {
        entry.next_hop_node = peer->node;
      }
      out.push_back(entry);
      break;
    }
  }
  return out;
}

struct SharedSegment {
  std::string local_port;
  NetAddress local_address;
  NetAddress remote_address;
};

// Lowest-named local port that shares an addressed subnet with `other`.
std::optional<SharedSegment> FindShared(const Network& network,
                                        const Node& node, const Node& other) {
  for (const auto& iface : node.config.interfaces) {
    if (!iface.address) continue;
    PortRef local{node.id, iface.name};
    int segment = network.SegmentOf(local);
    if (segment < 0) continue;
    for (const PortRef& port : network.SegmentPorts(segment)) {
      if (port.node != other.id) continue;
      auto remote = other.AddressOf(port.port);
      if (!remote || remote->subnet() != iface.address->subnet()) continue;
      return SharedSegment{iface.name, iface.address->address,
                           remote->address};
    }
  }
  return std::nullopt;
}

NetAddress RouterId(const Node& node) {
  auto addresses = node.Addresses();
  if (addresses.empty()) return NetAddress();
  return *std::max_element(addresses.begin(), addresses.end());
}

// First IGP path from `from` to `to` across the domains they share,
// lowest metric first.
std::optional<RouterPath> IgpPath(const std::map<IgpDomain, IgpResult>& igp,
                                  const NodeId& from, const NodeId& to) {
  std::optional<RouterPath> best;
  for (const auto& [domain, result] : igp) {
    auto row = result.paths.find(from);
    if (row == result.paths.end()) continue;
    auto cell = row->second.find(to);
    if (cell == row->second.end()) continue;
    if (!best || cell->second.metric < best->metric) best = cell->second;
  }
  return best;
}

// Whether `node` accepts a session with `peer` at `address`.
bool Accepts(const Node& node, const Node& peer, NetAddress address,
             bool direct) {
  const BgpConfig& bgp = *node.config.bgp;
  if (!bgp.neighbors) {
    return direct || bgp.local_as == peer.config.bgp->local_as;
  }
  return std::any_of(bgp.neighbors->begin(), bgp.neighbors->end(),
                     [&](const BgpNeighborConfig& n) {
                       return n.address == address &&
                              n.remote_as == peer.config.bgp->local_as;
                     });
}

}  // namespace

std::map<IgpDomain, AreaGraph> BuildAreaGraphs(const Network& network) {
  std::map<IgpDomain, AreaGraph> graphs;
  for (const auto& [id, node] : network.nodes()) {
    if (!node.forwards()) continue;
    for (const auto& igp : node.config.igps) {
      IgpDomain domain{node.area, igp.protocol};
      AreaGraph& graph = graphs[domain];
      graph.AddRouter(id);
      auto& advertised = graph.advertised[id];
      for (const InterfaceConfig* iface : IgpInterfaces(network, node, igp)) {
        advertised.push_back(iface->address->subnet());
        PortRef local{id, iface->name};
        const sim::Link* link = network.LinkAt(local);
        auto cost_it = igp.costs.find(iface->name);
        uint32_t cost = cost_it != igp.costs.end() ? cost_it->second
                                                   : link->cost;
        for (const PortRef& port :
             network.SegmentPorts(network.SegmentOf(local))) {
          if (port.node == id) continue;
          const Node& other = network.node(port.node);
          if (!other.forwards() || other.area != node.area) continue;
          const IgpConfig* other_igp = other.config.FindIgp(igp.protocol);
          if (other_igp == nullptr) continue;
          auto enabled = IgpInterfaces(network, other, *other_igp);
          auto match = std::find_if(
              enabled.begin(), enabled.end(), [&](const InterfaceConfig* c) {
                return c->name == port.port &&
                       c->address->subnet() == iface->address->subnet();
              });
          if (match == enabled.end()) continue;
          graph.AddAdjacency(id, Adjacency{port.node, std::max(cost, 1u),
                                           iface->name,
                                           (*match)->address->address});
        }
      }
      std::sort(advertised.begin(), advertised.end());
      advertised.erase(std::unique(advertised.begin(), advertised.end()),
                       advertised.end());
    }
  }
  return graphs;
}

BgpTopology BuildBgpTopology(const Network& network,
                             const std::map<IgpDomain, IgpResult>& igp) {
  BgpTopology topology;
  std::vector<const Node*> speakers;
  for (const auto& [id, node] : network.nodes()) {
    if (!node.forwards() || !node.config.bgp) continue;
    speakers.push_back(&node);
    topology.speakers.push_back(BgpSpeaker{id, node.config.bgp->local_as,
                                           RouterId(node),
                                           node.config.bgp->originate});
  }
  for (size_t i = 0; i < speakers.size(); ++i) {
    for (size_t j = i + 1; j < speakers.size(); ++j) {
      const Node& a = *speakers[i];
      const Node& b = *speakers[j];
      bool internal = a.config.bgp->local_as == b.config.bgp->local_as;
      if (internal) {
        if (!IgpPath(igp, a.id, b.id)) continue;
        NetAddress a_id = RouterId(a);
        NetAddress b_id = RouterId(b);
        if (Accepts(a, b, b_id, false) && Accepts(b, a, a_id, false)) {
          topology.peerings.push_back(BgpPeering{a.id, b.id, a_id, b_id});
        }
        continue;
      }
      auto shared = FindShared(network, a, b);
      if (!shared) continue;
      if (Accepts(a, b, shared->remote_address, true) &&
          Accepts(b, a, shared->local_address, true)) {
        topology.peerings.push_back(BgpPeering{
            a.id, b.id, shared->local_address, shared->remote_address});
      }
    }
  }
  return topology;
}

ControlPlane ComputeControlPlane(const Network& network) {
  ControlPlane plane;
  for (const auto& [domain, graph] : BuildAreaGraphs(network)) {
    plane.igp[domain] = domain.second == IgpProtocol::kOspfLike
                            ? ComputeLinkState(graph, SourceFor(domain.second))
                            : ComputeDistanceVector(graph,
                                                    SourceFor(domain.second));
  }
  plane.bgp_topology = BuildBgpTopology(network, plane.igp);
  plane.bgp = ComputePathVector(plane.bgp_topology.speakers,
                                plane.bgp_topology.peerings);

  for (const auto& [id, node] : network.nodes()) {
    if (!node.is_l3()) continue;
    std::vector<RouteEntry> connected = ConnectedRoutes(network, node);
    std::vector<RouteEntry> statics = StaticRoutes(network, node);
    std::vector<RouteEntry> igp_routes;
    for (const auto& [domain, result] : plane.igp) {
      auto it = result.routes.find(id);
      if (it == result.routes.end()) continue;
      igp_routes.insert(igp_routes.end(), it->second.begin(),
                        it->second.end());
    }
    std::vector<RouteEntry> bgp_routes;
    auto best = plane.bgp.best.find(id);
    if (best != plane.bgp.best.end()) {
      for (const auto& [prefix, path] : best->second) {
        if (path.local()) continue;
        RouteEntry entry;
        entry.prefix = prefix;
        entry.source = RouteSource::kBgpLike;
        entry.admin_distance = AdminDistance(RouteSource::kBgpLike,
                                             path.internal);
        entry.as_path = path.as_path;
        if (path.internal) {
          // Next-hop-self: forward toward the internal peer along the IGP.
          auto igp_path = IgpPath(plane.igp, id, *path.learned_from);
          if (!igp_path) continue;
          entry.metric = igp_path->metric;
          entry.out_port = igp_path->out_port;
          entry.next_hop = igp_path->next_hop;
          entry.next_hop_node = igp_path->via;
        } else {
          auto shared =
              FindShared(network, node, network.node(*path.learned_from));
          if (!shared) continue;
          entry.out_port = shared->local_port;
          entry.next_hop = path.neighbor_address;
          entry.next_hop_node = *path.learned_from;
        }
        bgp_routes.push_back(entry);
      }
    }
    plane.ribs.emplace(id, MergeRib(id, connected, statics, igp_routes,
                                    bgp_routes));
  }
  return plane;
}

std::map<NodeId, Rib> ComputeRibs(const Network& network) {
  return ComputeControlPlane(network).ribs;
}

}  // namespace sdwanlab::routing
