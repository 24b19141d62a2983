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

#include "sdwanlab/routing/path_vector.h"

#include <algorithm>
#include <tuple>

#include "sdwanlab/error.h"

namespace sdwanlab::routing {
namespace {

// External before internal on equal length; without it two internal peers
// holding equal external paths would keep swapping to each other's.
bool Better(const BgpPath& a, const BgpPath& b) {
  auto key = [](const BgpPath& p) {
    return std::make_tuple(!p.local(), p.as_path.size(), p.internal,
                           p.neighbor_address,
                           p.learned_from.value_or(NodeId()), p.as_path);
  };
  return key(a) < key(b);
}

struct Session {
  NodeId peer;
  NetAddress peer_address;
  bool internal;
};

}  // namespace

PathVectorResult ComputePathVector(std::span<const BgpSpeaker> speakers,
                                   std::span<const BgpPeering> peerings) {
  std::map<NodeId, const BgpSpeaker*> by_id;
  for (const auto& speaker : speakers) by_id[speaker.id] = &speaker;

  std::map<NodeId, std::vector<Session>> sessions;
  for (const auto& peering : peerings) {
    auto a = by_id.find(peering.a);
    auto b = by_id.find(peering.b);
    if (a == by_id.end() || b == by_id.end() || peering.a == peering.b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "peering references unknown speaker " + peering.a.str() +
                      "/" + peering.b.str());
    }
    bool internal = a->second->asn == b->second->asn;
    sessions[peering.a].push_back({peering.b, peering.b_address, internal});
    sessions[peering.b].push_back({peering.a, peering.a_address, internal});
  }

  using Table = std::map<Prefix, BgpPath>;
  std::map<NodeId, Table> tables;
  for (const auto& speaker : speakers) {
    Table& table = tables[speaker.id];
    for (const Prefix& prefix : speaker.originate) {
      table[prefix] = BgpPath{prefix, {}, std::nullopt, speaker.router_id, false};
    }
  }

  PathVectorResult result;
  const int limit = 4 * (static_cast<int>(speakers.size()) + 1);
  while (true) {
    std::map<NodeId, Table> next;
    for (const auto& speaker : speakers) {
      Table table;
      for (const Prefix& prefix : speaker.originate) {
        table[prefix] = tables.at(speaker.id).at(prefix);
      }
      for (const Session& session : sessions[speaker.id]) {
        const BgpSpeaker& peer = *by_id.at(session.peer);
        for (const auto& [prefix, path] : tables.at(session.peer)) {
          // Internal peers only pass on what they originated or learned
          // externally.
          if (session.internal && path.internal) continue;
          BgpPath offered{prefix, path.as_path, session.peer,
                          session.peer_address, session.internal};
          if (!session.internal) {
            offered.as_path.insert(offered.as_path.begin(), peer.asn);
          }
          if (std::find(offered.as_path.begin(), offered.as_path.end(),
                        speaker.asn) != offered.as_path.end()) {
            continue;
          }
          auto it = table.find(prefix);
          if (it == table.end() || Better(offered, it->second)) {
            table[prefix] = std::move(offered);
          }
        }
      }
      next[speaker.id] = std::move(table);
    }
    if (next == tables) break;
    tables = std::move(next);
    if (++result.rounds > limit) {
      throw Error(ErrorCode::kNonConvergence,
                  "path-vector did not converge within " +
                      std::to_string(limit) + " rounds");
    }
  }
  result.best = std::move(tables);
  return result;
}

}  // namespace sdwanlab::routing
