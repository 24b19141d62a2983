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

#ifndef SDWANLAB_ROUTING_CONTROL_PLANE_H_
#define SDWANLAB_ROUTING_CONTROL_PLANE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdwanlab/routing/igp.h"
#include "sdwanlab/routing/path_vector.h"
#include "sdwanlab/routing/rib.h"
#include "sdwanlab/sim/network.h"

namespace sdwanlab::routing {

// One IGP instance: the routers of an area running the same protocol.
using IgpDomain = std::pair<std::string, IgpProtocol>;

std::map<IgpDomain, AreaGraph> BuildAreaGraphs(const sim::Network& network);

// Speakers and established sessions derived from device configs. A session
// exists only when both ends agree: each side either auto-peers or lists the
// other's address with the right remote AS.
struct BgpTopology {
  std::vector<BgpSpeaker> speakers;
  std::vector<BgpPeering> peerings;
};

BgpTopology BuildBgpTopology(const sim::Network& network,
                             const std::map<IgpDomain, IgpResult>& igp);

struct ControlPlane {
  std::map<IgpDomain, IgpResult> igp;
  BgpTopology bgp_topology;
  PathVectorResult bgp;
  std::map<NodeId, Rib> ribs;
};

ControlPlane ComputeControlPlane(const sim::Network& network);

// RIB for every L3 node. Switches get none.
std::map<NodeId, Rib> ComputeRibs(const sim::Network& network);

}  // namespace sdwanlab::routing

#endif  // SDWANLAB_ROUTING_CONTROL_PLANE_H_
