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

#ifndef SDWANLAB_ROUTING_IGP_H_
#define SDWANLAB_ROUTING_IGP_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdwanlab/address.h"
#include "sdwanlab/routing/rib.h"
#include "sdwanlab/sim/types.h"

namespace sdwanlab::routing {

struct Adjacency {
  NodeId to;
  uint32_t cost = 1;  // must be >= 1
  std::string out_port;
  NetAddress next_hop;
};

// Routers of one IGP domain. Every participating router has an entry in
// `adjacency`, possibly empty.
struct AreaGraph {
  std::map<NodeId, std::vector<Adjacency>> adjacency;
  std::map<NodeId, std::vector<Prefix>> advertised;

  void AddRouter(const NodeId& id) { adjacency[id]; }
  void AddAdjacency(const NodeId& from, Adjacency adjacency);
};

// Best path from one router to another: total cost and first hop.
struct RouterPath {
  uint32_t metric = 0;
  NodeId via;
  std::string out_port;
  NetAddress next_hop;
};

struct IgpResult {
  // paths[from][to], from != to.
  std::map<NodeId, std::map<NodeId, RouterPath>> paths;
  // Prefix routes per router (prefixes it advertises itself are excluded).
  std::map<NodeId, std::vector<RouteEntry>> routes;
  // Rounds that changed some table (distance-vector only).
  int rounds = 0;
};

// Dijkstra per router. Equal-cost first hops are broken by lowest next-hop
// address, then out port. Throws Error(kDisconnectedArea).
IgpResult ComputeLinkState(const AreaGraph& graph,
                           RouteSource source = RouteSource::kOspfLike);

// Synchronous Bellman-Ford rounds with split horizon until no table changes.
// Same tie-breaking as ComputeLinkState. Throws Error(kNonConvergence) when
// more rounds than routers are needed, Error(kDisconnectedArea) as above.
IgpResult ComputeDistanceVector(const AreaGraph& graph,
                                RouteSource source = RouteSource::kEigrpLike);

}  // namespace sdwanlab::routing

#endif  // SDWANLAB_ROUTING_IGP_H_
