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

#ifndef SDWANLAB_TESTS_SUPPORT_ORACLES_H_
#define SDWANLAB_TESTS_SUPPORT_ORACLES_H_

// Independent reference computations used by the unit tests and by the
// acceptance binary. Nothing here calls into the code under test except to
// construct its inputs.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdwanlab/routing/igp.h"
#include "sdwanlab/routing/path_vector.h"
#include "sdwanlab/scenario/scenario.h"

namespace sdwanlab::testing {

std::filesystem::path SourceDir();
std::filesystem::path CanonicalScenario(const std::string& name);

inline constexpr uint64_t kUnreachable = std::numeric_limits<uint64_t>::max();

struct WeightedEdge {
  int a = 0;
  int b = 0;
  uint32_t cost = 1;
};

struct RandomGraph {
  int nodes = 0;
  std::vector<WeightedEdge> edges;  // undirected, no self loops or duplicates
};

// Random spanning tree plus extra edges; connected by construction.
RandomGraph RandomConnectedGraph(std::mt19937_64& rng, int nodes,
                                 uint32_t max_cost);

// All-pairs shortest distances; kUnreachable where no path exists.
std::vector<std::vector<uint64_t>> FloydWarshall(const RandomGraph& graph);

NodeId GraphNode(int index);
// Routers "R<i>" with symmetric adjacencies; router i advertises
// 192.168.i.0/24.
routing::AreaGraph ToAreaGraph(const RandomGraph& graph);

struct RandomPeeringGraph {
  std::vector<routing::BgpSpeaker> speakers;
  std::vector<routing::BgpPeering> peerings;
};

// Each speaker originates 10.<i>.0.0/16. With unique_as every speaker gets
// its own AS; otherwise ASes are drawn from a small pool so internal
// sessions occur.
RandomPeeringGraph RandomPeerings(std::mt19937_64& rng, int speakers,
                                  bool unique_as);

// Length (in AS hops) of the shortest loop-free chain of sessions from
// `from` to the originator of `prefix`, by exhaustive enumeration of simple
// paths. nullopt when none exists.
std::optional<size_t> ShortestAsPathByEnumeration(
    const RandomPeeringGraph& graph, const NodeId& from, const Prefix& prefix);

// True when `as_path` (nearest AS first) is realized by some simple chain of
// sessions from `from` to the originator of `prefix`.
bool AsPathRealizable(const RandomPeeringGraph& graph, const NodeId& from,
                      const Prefix& prefix,
                      const std::vector<uint32_t>& as_path);

// A single-area routed topology with two hosts whose shortest path is unique,
// together with the analytic round-trip time of that path.
struct RttTopology {
  std::string document;  // scenario JSON
  NodeId src;
  NodeId dst;
  std::vector<NodeId> path;  // every node from src to dst, switches included
  double expected_rtt_ms = 0.0;
  int node_count = 0;
};

RttTopology RandomRttTopology(std::mt19937_64& rng, double jitter_ms = 0.0);

// Fewest forwarding nodes (routers and edges) strictly between src and dst.
// Two nodes are adjacent when they have ports in the same L2 segment with
// addresses in the same subnet. A host source exits through its default
// gateway. nullopt when dst is unreachable that way.
std::optional<int> BfsForwardingHops(const scenario::ScenarioSpec& spec,
                                     const NodeId& src, const NodeId& dst);

}  // namespace sdwanlab::testing

#endif  // SDWANLAB_TESTS_SUPPORT_ORACLES_H_
