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

#include "sdwanlab/routing/igp.h"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "sdwanlab/error.h"

namespace sdwanlab::routing {
namespace {

auto HopKey(const RouterPath& p) {
  return std::make_tuple(p.metric, p.next_hop, p.out_port, p.via);
}

RouterPath FirstHop(const Adjacency& adjacency) {
  return RouterPath{adjacency.cost, adjacency.to, adjacency.out_port,
                    adjacency.next_hop};
}

void CheckConnected(const AreaGraph& graph, const IgpResult& result) {
  for (const auto& [from, unused] : graph.adjacency) {
    std::vector<std::string> missing;
    const auto& reach = result.paths.at(from);
    for (const auto& [to, unused2] : graph.adjacency) {
      if (to != from && reach.count(to) == 0) missing.push_back(to.str());
    }
    if (!missing.empty()) {
      std::string message = "routers unreachable from " + from.str() + ":";
      for (const auto& id : missing) message += " " + id;
      throw Error(ErrorCode::kDisconnectedArea, message);
    }
  }
}

void BuildPrefixRoutes(const AreaGraph& graph, RouteSource source,
                       IgpResult& result) {
  for (const auto& [from, reach] : result.paths) {
    std::set<Prefix> own;
    if (auto it = graph.advertised.find(from); it != graph.advertised.end()) {
      own.insert(it->second.begin(), it->second.end());
    }
    std::map<Prefix, RouteEntry> best;
    for (const auto& [to, path] : reach) {
      auto adv = graph.advertised.find(to);
      if (adv == graph.advertised.end()) continue;
      for (const Prefix& prefix : adv->second) {
        if (own.count(prefix) != 0) continue;
        RouteEntry entry;
        entry.prefix = prefix;
        entry.source = source;
        entry.admin_distance = AdminDistance(source);
        entry.metric = path.metric;
        entry.out_port = path.out_port;
        entry.next_hop = path.next_hop;
        entry.next_hop_node = path.via;
        auto it = best.find(prefix);
        if (it == best.end() || entry.PreferredOver(it->second)) {
          best[prefix] = entry;
        }
      }
    }
    auto& routes = result.routes[from];
    for (auto& [prefix, entry] : best) routes.push_back(std::move(entry));
  }
}

}  // namespace

void AreaGraph::AddAdjacency(const NodeId& from, Adjacency adj) {
  adjacency[adj.to];
  adjacency[from].push_back(std::move(adj));
}

IgpResult ComputeLinkState(const AreaGraph& graph, RouteSource source) {
  IgpResult result;
  for (const auto& [root, unused] : graph.adjacency) {
    std::map<NodeId, RouterPath> best;  // metric + first hop
    std::set<NodeId> done;
    using Item = std::pair<uint32_t, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    done.insert(root);
    auto relax = [&](const NodeId& from, const Adjacency& adj) {
      if (done.count(adj.to) != 0) return;
      RouterPath candidate = from == root ? FirstHop(adj) : best.at(from);
      candidate.metric = (from == root ? 0 : best.at(from).metric) + adj.cost;
      auto it = best.find(adj.to);
      if (it == best.end() || HopKey(candidate) < HopKey(it->second)) {
        bool improved = it == best.end() || candidate.metric < it->second.metric;
        best[adj.to] = candidate;
        if (improved) frontier.emplace(candidate.metric, adj.to);
      }
    };
    for (const auto& adj : graph.adjacency.at(root)) relax(root, adj);
    while (!frontier.empty()) {
      auto [metric, id] = frontier.top();
      frontier.pop();
      if (done.count(id) != 0 || metric != best.at(id).metric) continue;
      done.insert(id);
      for (const auto& adj : graph.adjacency.at(id)) relax(id, adj);
    }
    result.paths[root] = std::move(best);
  }
  CheckConnected(graph, result);
  BuildPrefixRoutes(graph, source, result);
  return result;
}

IgpResult ComputeDistanceVector(const AreaGraph& graph, RouteSource source) {
  using Table = std::map<NodeId, RouterPath>;
  std::map<NodeId, Table> tables;
  for (const auto& [id, unused] : graph.adjacency) tables[id];

  const int limit = static_cast<int>(graph.adjacency.size());
  int rounds = 0;
  while (true) {
    std::map<NodeId, Table> next;
    for (const auto& [id, adjacencies] : graph.adjacency) {
      Table& table = next[id];
      for (const auto& adj : adjacencies) {
        // The neighbor's advertisement, minus what it routes back through us.
        for (const auto& [dest, path] : tables.at(adj.to)) {
          if (dest == id || path.via == id) continue;
          RouterPath candidate = FirstHop(adj);
          candidate.metric = adj.cost + path.metric;
          auto it = table.find(dest);
          if (it == table.end() || HopKey(candidate) < HopKey(it->second)) {
            table[dest] = candidate;
          }
        }
        RouterPath direct = FirstHop(adj);
        auto it = table.find(adj.to);
        if (it == table.end() || HopKey(direct) < HopKey(it->second)) {
          table[adj.to] = direct;
        }
      }
    }
    bool changed = false;
    for (const auto& [id, table] : next) {
      const Table& old = tables.at(id);
      if (table.size() != old.size() ||
          !std::equal(table.begin(), table.end(), old.begin(),
                      [](const auto& a, const auto& b) {
                        return a.first == b.first &&
                               HopKey(a.second) == HopKey(b.second);
                      })) {
        changed = true;
        break;
      }
    }
    if (!changed) break;
    tables = std::move(next);
    if (++rounds > limit) {
      throw Error(ErrorCode::kNonConvergence,
                  "distance-vector did not converge within " +
                      std::to_string(limit) + " rounds");
    }
  }

  IgpResult result;
  result.rounds = rounds;
  result.paths = std::move(tables);
  CheckConnected(graph, result);
  BuildPrefixRoutes(graph, source, result);
  return result;
}

}  // namespace sdwanlab::routing
