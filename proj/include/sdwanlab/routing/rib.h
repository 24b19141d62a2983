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

#ifndef SDWANLAB_ROUTING_RIB_H_
#define SDWANLAB_ROUTING_RIB_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdwanlab/address.h"
#include "sdwanlab/sim/types.h"

namespace sdwanlab::routing {

enum class RouteSource { kConnected, kStatic, kEigrpLike, kOspfLike, kBgpLike };

std::string_view RouteSourceName(RouteSource source);

// connected 0, static 1, external path-vector 20, eigrp_like 90,
// ospf_like 110, internal path-vector 200.
int AdminDistance(RouteSource source, bool internal_bgp = false);

struct RouteEntry {
  Prefix prefix;
  RouteSource source = RouteSource::kConnected;
  int admin_distance = 0;
  uint32_t metric = 0;
  std::string out_port;
  // Absent for directly connected routes.
  std::optional<NetAddress> next_hop;
  std::optional<NodeId> next_hop_node;
  // Path-vector routes only; nearest AS first.
  std::vector<uint32_t> as_path;

  // Strict preference: admin distance, metric, next-hop address, out port.
  bool PreferredOver(const RouteEntry& other) const;
  std::string ToString() const;

  friend bool operator==(const RouteEntry&, const RouteEntry&) = default;
};

// Best route per prefix for one device.
class Rib {
 public:
  Rib() = default;
  explicit Rib(NodeId owner) : owner_(std::move(owner)) {}

  const NodeId& owner() const { return owner_; }

  // Keeps the entry if it beats the current best for its prefix.
  void Offer(const RouteEntry& entry);
  const RouteEntry* Find(const Prefix& prefix) const;
  // Longest-prefix match.
  const RouteEntry* Lookup(NetAddress address) const;

  const std::map<Prefix, RouteEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  friend bool operator==(const Rib&, const Rib&) = default;

 private:
  NodeId owner_;
  std::map<Prefix, RouteEntry> entries_;
};

// Admin-distance merge of the per-source candidate lists of one owner.
// Result does not depend on the order of inputs or of entries within them.
Rib MergeRib(const NodeId& owner, std::span<const RouteEntry> connected,
             std::span<const RouteEntry> statics, std::span<const RouteEntry> igp,
             std::span<const RouteEntry> bgp);

}  // namespace sdwanlab::routing

#endif  // SDWANLAB_ROUTING_RIB_H_
